"""Rendering of analysis reports as text or JSON.

Both renderings are deterministic: identical reports give identical bytes.
"""

import json

from pydantic import BaseModel

from chaincode.schemas.analysis import AnalysisReport


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_json(report: BaseModel) -> str:
    """Dump a report model as indented JSON, keys in schema order."""
    return json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"


def render_text(report: AnalysisReport) -> str:
    """Render an analysis report as human-readable text.

    Args:
        report: The analysis to render.

    Returns:
        The report, one section per block, ending with a newline.
    """
    ring = report.ring
    lines = [f"ring: {ring.label} (p={ring.p}, s={ring.s}, nu={ring.nu})"]
    if ring.field_modulus:
        lines.append(f"field modulus: {ring.field_modulus}")
    lines.append(f"length: n = {report.n}")
    lines.append("generators:")
    lines.extend(f"  {g}" for g in report.generators)

    if report.flags.zero_code:
        lines.append("zero code: C = {0}")
        lines.append("cardinality: |C| = 1")
        lines.append("rank: 0")
        return "\n".join(lines) + "\n"

    canonical = report.canonical
    lines.append(f"canonical generators (m = {canonical.m}):")
    for j, g in enumerate(canonical.generators):
        lines.append(f"  f_{j}: i={g.i} t={g.t}  f = {g.f}  h = {g.h}")
    lines.append("normal form:")
    for j, g in enumerate(report.normal_form.generators):
        lines.append(f"  u_{j} = {g.generator}")
        for offset, level in enumerate(g.levels):
            lines.append(f"    b_{j},{g.i + offset} = {level}")
    lines.append("torsion tower:")
    for lv in report.torsion:
        lines.append(f"  Tor_{lv.level}: degree {lv.degree}, generator {lv.generator}")

    p = ring.p
    exponent = report.cardinality_exponent
    lines.append(f"cardinality: |C| = {p}^{exponent} = {p**exponent}")
    lines.append(
        f"rank: {report.rank} (minimal spanning set of "
        f"{report.normal_form.minimal_spanning_set_size} elements)"
    )
    lines.append("distance:")
    for result in report.distance:
        extra = f", {result.enumerated} candidates" if result.enumerated else ""
        if result.applicable is not None:
            extra += ", trusted" if result.applicable else ", advisory (n' > 1)"
        lines.append(f"  {result.method.value}: {result.value}{extra}")

    mds = report.mds
    basis = " [advisory: d from paper-formula]" if mds.advisory else ""
    lines.append(
        f"MDS: {_yes(mds.verdict)} (E = {mds.cardinality_exponent}, "
        f"Singleton exponent {mds.singleton_exponent}; theorem route {_yes(mds.theorem_route)})"
        f"{basis}"
    )
    if mds.tor0_exponent is not None:
        lines.append(
            f"  Tor_0: |Tor_0| = {p}^{mds.tor0_exponent} vs "
            f"|F_q|^(n - d + 1) = {p}^{mds.tor0_singleton_exponent}"
        )
    mhdr = report.mhdr
    lines.append(
        f"MHDR: {_yes(mhdr.verdict)} (d = {mhdr.d}, n - rank + 1 = {report.n - mhdr.rank + 1})"
        f"{basis}"
    )
    if report.flags.mismatches:
        lines.append("flags:")
        for flag in report.flags.mismatches:
            trust = ""
            if flag.trusted is not None:
                trust = " [trusted]" if flag.trusted else " [advisory]"
            lines.append(
                f"  {flag.check}: {flag.left}={flag.left_value} vs "
                f"{flag.right}={flag.right_value}{trust}"
            )
    else:
        lines.append("flags: none")
    for skipped in report.flags.skipped:
        lines.append(f"skipped {skipped.check}: {skipped.reason}")
    return "\n".join(lines) + "\n"
