"""Exception types raised by the scenario toolkit.

Validation problems found in user documents are *data* (ValidationError
records), not exceptions; the classes here cover programming-contract and
environment failures.
"""


class ScenarioError(Exception):
    """Base class for all toolkit errors."""


class MalformedXml(ScenarioError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position  # (line, column) or None


class UnknownElement(ScenarioError):
    def __init__(self, name, position=None):
        super().__init__(f"unknown element <{name}>")
        self.name = name
        self.position = position


class BadEnumValue(ScenarioError):
    def __init__(self, attribute, value, allowed):
        allowed = sorted(allowed)
        super().__init__(
            f"attribute {attribute!r}: value {value!r} not in {{{', '.join(allowed)}}}"
        )
        self.attribute = attribute
        self.value = value
        self.allowed = allowed


class DuplicateName(ScenarioError):
    def __init__(self, name):
        super().__init__(f"duplicate node name {name!r}")
        self.name = name


class BaseConflict(ScenarioError):
    def __init__(self, name):
        super().__init__(f"cannot deconflict generated node name {name!r}")
        self.name = name


class WeightSumNonPositive(ScenarioError):
    pass


class MissingTotalHosts(ScenarioError):
    pass


class InfeasibleDegree(ScenarioError):
    def __init__(self, k, routers):
        super().__init__(f"no connected {k}-regular graph on {routers} routers")
        self.k = k
        self.routers = routers


class CountExceedsHosts(ScenarioError):
    pass


class NotEnoughHosts(ScenarioError):
    pass


class SegmentationFixpointNotReached(ScenarioError):
    pass


class GenerationStepError(ScenarioError):
    """Wraps a pipeline-step failure with the step name."""

    def __init__(self, step, cause):
        super().__init__(f"step {step!r} failed: {cause}")
        self.step = step
        self.cause = cause


class AddressSpaceExhausted(ScenarioError):
    pass


class InstanceNotRunning(ScenarioError):
    pass


class BadDuration(ScenarioError):
    pass


class BadEventTime(ScenarioError):
    pass


class UnknownInstance(ScenarioError):
    def __init__(self, instance_id):
        super().__init__(f"unknown instance {instance_id!r}")
        self.instance_id = instance_id


class IllegalTransition(ScenarioError):
    def __init__(self, from_state, to_state):
        super().__init__(f"illegal transition {from_state} -> {to_state}")
        self.from_state = from_state
        self.to_state = to_state


class MissingColumn(ScenarioError):
    def __init__(self, name):
        super().__init__(f"catalog CSV missing column {name!r}")
        self.name = name


class BadColumnValue(ScenarioError):
    def __init__(self, row, column, value, allowed):
        super().__init__(
            f"row {row}: column {column!r} value {value!r} not in {sorted(allowed)}"
        )
        self.row = row
        self.column = column
        self.value = value


class DuplicateEntry(ScenarioError):
    def __init__(self, name):
        super().__init__(f"duplicate catalog entry {name!r}")
        self.name = name


class UnsatisfiableRequirement(ScenarioError):
    pass


class BackendUnavailable(ScenarioError):
    pass


class NoXmlInResponse(ScenarioError):
    pass
