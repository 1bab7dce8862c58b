"""Domain types: declarative scenario specs and concrete scenario graphs.

Everything here is an immutable value; construction does not validate
(validation lives in scenforge.validation and the parsers).
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

# Closed enumerations. The authoritative machine-readable copy ships in
# data/scenario_schema.json; test_schema_consistency keeps the two in sync.
NODE_ENTRY_TYPES = ("PC", "Workstation", "Server", "Random")
HOST_TYPES = ("PC", "Workstation", "Server")
GRAPH_NODE_TYPES = ("PC", "Workstation", "Server", "Router", "Switch", "Docker")
ROUTING_PROTOCOLS = ("RIP", "RIPv2", "OSPFv2", "OSPFv3", "BGP")
EDGE_PROFILE_KINDS = ("Min", "Uniform", "NonUniform", "Exact", "Random")
CONTENT_TYPES = ("Random", "text", "photo", "audio", "video", "gibberish")
CONCRETE_CONTENT_TYPES = ("text", "photo", "audio", "video", "gibberish")
TRANSPORTS = ("TCP", "UDP")
PATTERNS = ("continuous", "periodic", "burst", "poisson", "ramp")
SEGMENTATION_KINDS = ("Random", "Firewall", "NAT", "CUSTOM")
ENTRY_MODES = ("count", "weight")
FIREWALL_ACTIONS = ("accept", "drop", "nat")
VULN_TYPES = ("docker-compose", "binary")
VULN_VECTORS = ("local", "remote")
VULN_MODES = ("count", "weight", "random")

# The seven pipeline steps, in execution order.
PIPELINE_STEPS = (
    "weight_normalization",
    "host_assignment",
    "grouping",
    "router_linking",
    "service_assignment",
    "traffic_flow_construction",
    "segmentation_rule_generation",
)

WEIGHT_TOLERANCE = 1e-6


@dataclass(frozen=True)
class NodeEntry:
    node_type: str  # NODE_ENTRY_TYPES
    mode: str  # count | weight
    value: float


@dataclass(frozen=True)
class EdgeProfile:
    kind: str  # EDGE_PROFILE_KINDS
    k: Optional[int] = None  # Uniform / Exact
    range: Optional[tuple[int, int]] = None  # NonUniform


@dataclass(frozen=True)
class TopologySpec:
    node_entries: tuple[NodeEntry, ...] = ()
    total_hosts: Optional[int] = None
    router_density: float = 0.1
    r2r_profile: EdgeProfile = EdgeProfile("Min")
    r2s_profile: EdgeProfile = EdgeProfile("NonUniform", range=(1, 3))
    s2h_range: tuple[int, int] = (1, 4)


@dataclass(frozen=True)
class ProtocolEntry:
    protocol: str  # ROUTING_PROTOCOLS
    mode: str
    value: float


@dataclass(frozen=True)
class RoutingSpec:
    protocol_entries: tuple[ProtocolEntry, ...] = ()


@dataclass(frozen=True)
class ServiceSpec:
    name: str
    mode: str
    value: float


@dataclass(frozen=True)
class TrafficSpec:
    content_type: str = "Random"
    transport: str = "UDP"
    pattern: str = "continuous"
    jitter_pct: float = 0.0
    rate: float = 1.0
    flow_count: object = 1  # positive int or the string "Random"


@dataclass(frozen=True)
class SegmentationSpec:
    segmentation_kind: str
    scope: str = "*"  # subnet/group selector, resolved at generation time
    custom_script: Optional[str] = None


@dataclass(frozen=True)
class EventSpec:
    at_seconds: float
    script_path: str
    description: str = ""


@dataclass(frozen=True)
class VulnAssignmentSpec:
    mode: str = "count"  # count | weight | random
    value: float = 0
    vuln_type: Optional[str] = None  # filter
    vector: Optional[str] = None  # filter
    required_names: tuple[str, ...] = ()


@dataclass(frozen=True)
class BaseScenarioRef:
    path: str


@dataclass(frozen=True)
class ScenarioSpec:
    topology: TopologySpec = TopologySpec()
    routing: RoutingSpec = RoutingSpec()
    services: tuple[ServiceSpec, ...] = ()
    traffic: tuple[TrafficSpec, ...] = ()
    segmentation: tuple[SegmentationSpec, ...] = ()
    vulnerabilities: Optional[VulnAssignmentSpec] = None
    events: tuple[EventSpec, ...] = ()
    base: Optional[BaseScenarioRef] = None
    seed: Optional[int] = None


# ---------------------------------------------------------------- graph side


@dataclass(frozen=True)
class VulnRef:
    name: str
    vuln_type: str
    vector: str
    ports: tuple[int, ...] = ()


@dataclass(frozen=True)
class Node:
    id: int
    name: str
    node_type: str  # GRAPH_NODE_TYPES
    services: tuple[str, ...] = ()
    vulnerability: Optional[VulnRef] = None
    routing_protocol: Optional[str] = None


@dataclass(frozen=True)
class Edge:
    a: int
    b: int
    static: bool = False  # static inter-domain route (router-router only)

    def canonical(self) -> "Edge":
        if self.a > self.b:
            return Edge(self.b, self.a, self.static)
        return self

    def key(self) -> tuple[int, int]:
        return (min(self.a, self.b), max(self.a, self.b))


@dataclass(frozen=True)
class FirewallRule:
    action: str  # accept | drop | nat
    src_selector: str
    dst_selector: str
    protocol: Optional[str] = None  # TCP | UDP; None matches only port-less traffic
    port: Optional[int] = None
    provenance: str = "generated"  # generated | custom


@dataclass(frozen=True)
class Flow:
    src: str  # node name
    dst: str
    content_type: str  # concrete, never "Random"
    transport: str
    pattern: str
    jitter_pct: float
    rate: float
    port: int


@dataclass(frozen=True)
class GenerationStats:
    hosts: int = 0
    switch_groups: int = 0
    routers: int = 0
    flows: int = 0
    weight_rows: int = 0
    step_op_counts: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, GenerationStats):
            return NotImplemented
        return (
            self.hosts,
            self.switch_groups,
            self.routers,
            self.flows,
            self.weight_rows,
            self.step_op_counts,
        ) == (
            other.hosts,
            other.switch_groups,
            other.routers,
            other.flows,
            other.weight_rows,
            other.step_op_counts,
        )


@dataclass(frozen=True)
class ScenarioGraph:
    nodes: tuple[Node, ...] = ()
    edges: tuple[Edge, ...] = ()
    # (node_id, iface) -> (ipv4 string, prefix length)
    addresses: dict = field(default_factory=dict)
    firewall_rules: tuple[FirewallRule, ...] = ()
    traffic_flows: tuple[Flow, ...] = ()
    events: tuple[EventSpec, ...] = ()
    stats: GenerationStats = field(default_factory=GenerationStats)

    def __eq__(self, other):
        if not isinstance(other, ScenarioGraph):
            return NotImplemented
        return (
            self.nodes,
            self.edges,
            self.addresses,
            self.firewall_rules,
            self.traffic_flows,
            self.events,
            self.stats,
        ) == (
            other.nodes,
            other.edges,
            other.addresses,
            other.firewall_rules,
            other.traffic_flows,
            other.events,
            other.stats,
        )

    def node_by_id(self, node_id: int) -> Optional[Node]:
        for n in self.nodes:
            if n.id == node_id:
                return n
        return None

    def node_by_name(self, name: str) -> Optional[Node]:
        for n in self.nodes:
            if n.name == name:
                return n
        return None

    def neighbors(self, node_id: int) -> list[int]:
        out = []
        for e in self.edges:
            if e.a == node_id:
                out.append(e.b)
            elif e.b == node_id:
                out.append(e.a)
        return out

    def hosts(self) -> list[Node]:
        return [n for n in self.nodes if n.node_type in HOST_TYPES or n.node_type == "Docker"]

    def routers(self) -> list[Node]:
        return [n for n in self.nodes if n.node_type == "Router"]

    def switches(self) -> list[Node]:
        return [n for n in self.nodes if n.node_type == "Switch"]


def with_replaced(obj, **changes):
    """dataclasses.replace re-export; keeps call sites terse."""
    return replace(obj, **changes)
