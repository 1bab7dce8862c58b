"""Scenario-spec XML: closed-grammar parsing and canonical serialization.

The grammar is defined by data/scenario_schema.json. Parsing is strict about
vocabulary (unknown elements/attributes and out-of-enum values raise), but
lenient about absent sections: an empty <scenario/> yields a spec with zero
entries in every section.
"""
from __future__ import annotations

from . import schema
from .errors import BadEnumValue, MalformedXml, UnknownElement
from .model import (
    BaseScenarioRef,
    EdgeProfile,
    EventSpec,
    NodeEntry,
    ProtocolEntry,
    RoutingSpec,
    ScenarioSpec,
    SegmentationSpec,
    ServiceSpec,
    TopologySpec,
    TrafficSpec,
    VulnAssignmentSpec,
)
from .xmlutil import XmlWriter, fmt_number, parse_with_meta

_PROFILE_TAGS = ("r2r", "r2s")


def _check_vocabulary(root, meta):
    """Reject unknown elements/attributes and bad enum values everywhere."""
    for elem in root.iter():
        desc = schema.element_schema(elem.tag)
        where = meta[id(elem)]
        if desc is None:
            raise UnknownElement(elem.tag, position=(where.line, where.column))
        for attr, value in elem.attrib.items():
            aspec = desc["attributes"].get(attr)
            if aspec is None:
                raise UnknownElement(f"{elem.tag}@{attr}", position=(where.line, where.column))
            if "enum" in aspec and value not in schema.enum_values(aspec["enum"]):
                raise BadEnumValue(attr, value, schema.enum_values(aspec["enum"]))
        for child in elem:
            if child.tag not in desc["children"]:
                cw = meta[id(child)]
                raise UnknownElement(child.tag, position=(cw.line, cw.column))


def _num(elem, attr, default=None, required=False):
    raw = elem.get(attr)
    if raw is None:
        if required:
            raise MalformedXml(f"<{elem.tag}> missing required attribute {attr!r}")
        return default
    try:
        return float(raw)
    except ValueError:
        raise MalformedXml(f"<{elem.tag}> attribute {attr!r}: not a number: {raw!r}")


def _int(elem, attr, default=None, required=False):
    raw = elem.get(attr)
    if raw is None:
        if required:
            raise MalformedXml(f"<{elem.tag}> missing required attribute {attr!r}")
        return default
    try:
        return int(raw)
    except ValueError:
        raise MalformedXml(f"<{elem.tag}> attribute {attr!r}: not an integer: {raw!r}")


def _parse_profile(elem) -> EdgeProfile:
    kind = elem.get("kind")
    if kind is None:
        raise MalformedXml(f"<{elem.tag}> missing required attribute 'kind'")
    k = _int(elem, "k")
    lo = _int(elem, "min")
    hi = _int(elem, "max")
    if kind in ("Uniform", "Exact"):
        if k is None:
            raise MalformedXml(f"<{elem.tag}> kind={kind} requires attribute 'k'")
        if lo is not None or hi is not None:
            raise MalformedXml(f"<{elem.tag}> kind={kind} takes only 'k'")
        return EdgeProfile(kind, k=k)
    if kind == "NonUniform":
        if lo is None or hi is None:
            raise MalformedXml(f"<{elem.tag}> kind=NonUniform requires 'min' and 'max'")
        if k is not None:
            raise MalformedXml(f"<{elem.tag}> kind=NonUniform takes no 'k'")
        if lo > hi:
            raise MalformedXml(f"<{elem.tag}> min > max")
        return EdgeProfile(kind, range=(lo, hi))
    # Min / Random carry no parameters
    if k is not None or lo is not None or hi is not None:
        raise MalformedXml(f"<{elem.tag}> kind={kind} carries no parameters")
    return EdgeProfile(kind)


def _parse_topology(elem) -> TopologySpec:
    entries = []
    r2r = TopologySpec().r2r_profile
    r2s = TopologySpec().r2s_profile
    s2h = TopologySpec().s2h_range
    for child in elem:
        if child.tag == "node":
            entries.append(
                NodeEntry(
                    node_type=child.get("node_type"),
                    mode=child.get("mode"),
                    value=_num(child, "value", required=True),
                )
            )
        elif child.tag == "r2r":
            r2r = _parse_profile(child)
        elif child.tag == "r2s":
            r2s = _parse_profile(child)
        elif child.tag == "s2h":
            lo = _int(child, "min", required=True)
            hi = _int(child, "max", required=True)
            if lo > hi:
                raise MalformedXml("<s2h> min > max")
            s2h = (lo, hi)
    return TopologySpec(
        node_entries=tuple(entries),
        total_hosts=_int(elem, "total_hosts"),
        router_density=_num(elem, "router_density", default=0.1),
        r2r_profile=r2r,
        r2s_profile=r2s,
        s2h_range=s2h,
    )


def _parse_flow_count(elem):
    raw = elem.get("flow_count")
    if raw is None:
        return 1
    if raw == "Random":
        return "Random"
    try:
        return int(raw)
    except ValueError:
        raise MalformedXml(f"<flow> flow_count: expected integer or 'Random', got {raw!r}")


def parse_scenario_spec(text: str) -> ScenarioSpec:
    root, meta = parse_with_meta(text)
    if root.tag != "scenario":
        raise UnknownElement(root.tag, position=(meta[id(root)].line, meta[id(root)].column))
    _check_vocabulary(root, meta)

    spec = ScenarioSpec()
    topology = TopologySpec()
    routing = RoutingSpec()
    services: list[ServiceSpec] = []
    traffic: list[TrafficSpec] = []
    segmentation: list[SegmentationSpec] = []
    vulnerabilities = None
    events: list[EventSpec] = []
    base = None

    for section in root:
        if section.tag == "topology":
            topology = _parse_topology(section)
        elif section.tag == "routing":
            routing = RoutingSpec(
                protocol_entries=tuple(
                    ProtocolEntry(
                        protocol=c.get("protocol"),
                        mode=c.get("mode"),
                        value=_num(c, "value", required=True),
                    )
                    for c in section
                )
            )
        elif section.tag == "services":
            for c in section:
                name = c.get("name")
                if name is None:
                    raise MalformedXml("<service> missing required attribute 'name'")
                services.append(ServiceSpec(name=name, mode=c.get("mode"), value=_num(c, "value", required=True)))
        elif section.tag == "traffic":
            for c in section:
                traffic.append(
                    TrafficSpec(
                        content_type=c.get("content_type", "Random"),
                        transport=c.get("transport", "UDP"),
                        pattern=c.get("pattern", "continuous"),
                        jitter_pct=_num(c, "jitter_pct", default=0.0),
                        rate=_num(c, "rate", default=1.0),
                        flow_count=_parse_flow_count(c),
                    )
                )
        elif section.tag == "segmentation":
            for c in section:
                segmentation.append(
                    SegmentationSpec(
                        segmentation_kind=c.get("segmentation_kind"),
                        scope=c.get("scope", "*"),
                        custom_script=c.get("custom_script"),
                    )
                )
        elif section.tag == "vulnerabilities":
            required = tuple(x for x in (section.get("required") or "").split(";") if x)
            vulnerabilities = VulnAssignmentSpec(
                mode=section.get("mode", "count"),
                value=_num(section, "value", default=0.0),
                vuln_type=section.get("vuln_type"),
                vector=section.get("vector"),
                required_names=required,
            )
        elif section.tag == "events":
            for c in section:
                path = c.get("script_path")
                if path is None:
                    raise MalformedXml("<event> missing required attribute 'script_path'")
                events.append(
                    EventSpec(
                        at_seconds=_num(c, "at_seconds", required=True),
                        script_path=path,
                        description=c.get("description", ""),
                    )
                )
        elif section.tag == "base":
            path = section.get("path")
            if path is None:
                raise MalformedXml("<base> missing required attribute 'path'")
            base = BaseScenarioRef(path=path)

    return ScenarioSpec(
        topology=topology,
        routing=routing,
        services=tuple(services),
        traffic=tuple(traffic),
        segmentation=tuple(segmentation),
        vulnerabilities=vulnerabilities,
        events=tuple(events),
        base=base,
        seed=_int(root, "seed"),
    )


def _profile_attrs(profile: EdgeProfile) -> list[tuple[str, str]]:
    attrs = [("kind", profile.kind)]
    if profile.k is not None:
        attrs.append(("k", str(profile.k)))
    if profile.range is not None:
        attrs.append(("min", str(profile.range[0])))
        attrs.append(("max", str(profile.range[1])))
    return attrs


def serialize_scenario_spec(spec: ScenarioSpec) -> str:
    w = XmlWriter()
    root_attrs = [("version", "1")]
    if spec.seed is not None:
        root_attrs.append(("seed", str(spec.seed)))
    w.open("scenario", root_attrs)

    t = spec.topology
    topo_attrs = [("router_density", fmt_number(t.router_density))]
    if t.total_hosts is not None:
        topo_attrs.append(("total_hosts", str(t.total_hosts)))
    w.open("topology", topo_attrs)
    for entry in t.node_entries:
        w.leaf("node", [("node_type", entry.node_type), ("mode", entry.mode), ("value", fmt_number(entry.value))])
    w.leaf("r2r", _profile_attrs(t.r2r_profile))
    w.leaf("r2s", _profile_attrs(t.r2s_profile))
    w.leaf("s2h", [("min", str(t.s2h_range[0])), ("max", str(t.s2h_range[1]))])
    w.close("topology")

    if spec.routing.protocol_entries:
        w.open("routing")
        for entry in spec.routing.protocol_entries:
            w.leaf("protocol", [("protocol", entry.protocol), ("mode", entry.mode), ("value", fmt_number(entry.value))])
        w.close("routing")
    if spec.services:
        w.open("services")
        for s in spec.services:
            w.leaf("service", [("name", s.name), ("mode", s.mode), ("value", fmt_number(s.value))])
        w.close("services")
    if spec.traffic:
        w.open("traffic")
        for f in spec.traffic:
            w.leaf(
                "flow",
                [
                    ("content_type", f.content_type),
                    ("transport", f.transport),
                    ("pattern", f.pattern),
                    ("jitter_pct", fmt_number(f.jitter_pct)),
                    ("rate", fmt_number(f.rate)),
                    ("flow_count", str(f.flow_count)),
                ],
            )
        w.close("traffic")
    if spec.segmentation:
        w.open("segmentation")
        for r in spec.segmentation:
            attrs = [("segmentation_kind", r.segmentation_kind), ("scope", r.scope)]
            if r.custom_script is not None:
                attrs.append(("custom_script", r.custom_script))
            w.leaf("rule", attrs)
        w.close("segmentation")
    if spec.vulnerabilities is not None:
        v = spec.vulnerabilities
        attrs = [("mode", v.mode), ("value", fmt_number(v.value))]
        if v.vuln_type is not None:
            attrs.append(("vuln_type", v.vuln_type))
        if v.vector is not None:
            attrs.append(("vector", v.vector))
        if v.required_names:
            attrs.append(("required", ";".join(v.required_names)))
        w.leaf("vulnerabilities", attrs)
    if spec.events:
        w.open("events")
        for e in spec.events:
            attrs = [("at_seconds", fmt_number(e.at_seconds)), ("script_path", e.script_path)]
            if e.description:
                attrs.append(("description", e.description))
            w.leaf("event", attrs)
        w.close("events")
    if spec.base is not None:
        w.leaf("base", [("path", spec.base.path)])

    w.close("scenario")
    return w.text()
