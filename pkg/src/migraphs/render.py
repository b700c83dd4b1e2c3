"""Static renderers: ascii/svg lane diagrams and matplotlib report figures.

All output is deterministic for a fixed input: intervals are sorted before
drawing and coordinates are exact rationals scaled by a fixed density.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InvalidFamily
from .intervals import IntervalFamily, validate_family

ASCII_DENSITY = 4     # characters per coordinate unit
SVG_UNIT = 28         # pixels per coordinate unit
SVG_ROW = 18          # pixels per stacking row


def _checked(f: IntervalFamily):
    report = validate_family(f)
    if not report.ok:
        raise InvalidFamily(report)


def _tracks(f: IntervalFamily):
    tracks = sorted({p.track for m in f.members for p in m.parts})
    return tracks or [0]


def _bars(f: IntervalFamily, track):
    bars = []
    for m in f.members:
        for p in m.parts:
            if p.track == track:
                bars.append((p.lo, p.hi, m.label))
    bars.sort()
    return bars


def _stack(bars):
    """Assign non-overlapping rows greedily by start coordinate."""
    rows = []
    placed = []
    for lo, hi, label in bars:
        for i, end in enumerate(rows):
            if end <= lo:
                rows[i] = hi
                placed.append((i, lo, hi, label))
                break
        else:
            rows.append(hi)
            placed.append((len(rows) - 1, lo, hi, label))
    return placed, len(rows)


def render_family(f: IntervalFamily, format: str = "ascii") -> str:
    """Lane diagram of a family: one lane per track, one labeled bar per
    interval."""
    if format == "ascii":
        return _render_ascii(f)
    if format == "svg":
        return _render_svg(f)
    raise ValueError(f"unknown render format {format!r}")


def _render_ascii(f: IntervalFamily) -> str:
    _checked(f)
    out = [f"family kind={f.kind} t={f.t} members={len(f.members)} "
           f"unit={f.unit} balanced={f.balanced}"]
    if not f.members:
        return "\n".join(out) + "\n"
    lo0 = min(p.lo for m in f.members for p in m.parts)
    width = max(len(m.label) for m in f.members)
    for track in _tracks(f):
        bars = _bars(f, track)
        out.append(f"track {track}:")
        for lo, hi, label in bars:
            start = int((lo - lo0) * ASCII_DENSITY)
            span = max(int((hi - lo) * ASCII_DENSITY), 2)
            out.append(f"  {label:<{width}} " + " " * start
                       + "(" + "=" * (span - 2) + ")")
    return "\n".join(out) + "\n"


def _fmt(x: Fraction) -> str:
    return f"{float(x):.2f}"


def _render_svg(f: IntervalFamily) -> str:
    _checked(f)
    body = []
    if f.members:
        lo0 = min(p.lo for m in f.members for p in m.parts)
        hi1 = max(p.hi for m in f.members for p in m.parts)
    else:
        lo0, hi1 = Fraction(0), Fraction(1)
    y = 24
    for track in _tracks(f):
        placed, nrows = _stack(_bars(f, track))
        body.append(f'<text x="4" y="{y}" font-size="12">track {track}</text>')
        y += 8
        for row, lo, hi, label in placed:
            x = _fmt((lo - lo0) * SVG_UNIT + 8)
            w = _fmt((hi - lo) * SVG_UNIT)
            ry = y + row * SVG_ROW
            body.append(f'<rect x="{x}" y="{ry}" width="{w}" '
                        f'height="{SVG_ROW - 6}" fill="#7aa6c2" '
                        f'stroke="#1f3b4d"/>')
            body.append(f'<text x="{x}" y="{ry + SVG_ROW - 8}" '
                        f'font-size="9">{label}</text>')
        y += nrows * SVG_ROW + 16
    width = _fmt((hi1 - lo0) * SVG_UNIT + 16)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{y}" font-family="monospace">')
    return head + "\n" + "\n".join(body) + "\n</svg>\n"


# -- matplotlib report figures -------------------------------------------

def write_report_figures(report, stem):
    """PNG figures next to a verification report: per-trial oracle node
    counts with agreement markers, and a lane diagram of the anchored family
    when the reduction targets one."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    paths = []
    idx = [t.index for t in report.trials]
    fig, ax = plt.subplots(figsize=(8, 3.2))
    ax.bar([i - 0.2 for i in idx], [t.source_nodes for t in report.trials],
           width=0.4, label="source oracle nodes", color="#4a7fb5")
    ax.bar([i + 0.2 for i in idx], [t.target_nodes for t in report.trials],
           width=0.4, label="target oracle nodes", color="#c98a3d")
    ax.set_yscale("symlog")
    ax.set_xlabel("trial")
    ax.set_ylabel("search nodes")
    ax.set_title(f"{report.name}: oracle work per trial")
    for t in report.trials:
        if not t.ok:
            ax.axvspan(t.index - 0.5, t.index + 0.5, color="red", alpha=0.2)
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    nodes_path = f"{stem}_nodes.png"
    fig.savefig(nodes_path, dpi=110)
    plt.close(fig)
    paths.append(nodes_path)

    family = getattr(report, "anchored_family", None)
    if family is not None:
        fig = family_figure(family, f"{report.name}: anchored instance layout")
        fam_path = f"{stem}_family.png"
        fig.savefig(fam_path, dpi=110)
        plt.close(fig)
        paths.append(fam_path)
    return paths


def family_figure(f: IntervalFamily, title: str):
    """Matplotlib lane diagram (same layout as the svg renderer)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

    _checked(f)
    tracks = _tracks(f)
    fig, axes = plt.subplots(len(tracks), 1,
                             figsize=(10, 2.2 * len(tracks)), squeeze=False)
    for ax, track in zip(axes[:, 0], tracks):
        placed, nrows = _stack(_bars(f, track))
        for row, lo, hi, label in placed:
            ax.add_patch(Rectangle((float(lo), row), float(hi - lo), 0.8,
                                   facecolor="#7aa6c2", edgecolor="#1f3b4d",
                                   linewidth=0.6))
            ax.text(float(lo) + 0.05, row + 0.25, label, fontsize=5)
        ax.set_xlim(min((float(lo) for _, lo, _, _ in placed), default=0) - 0.5,
                    max((float(hi) for _, _, hi, _ in placed), default=1) + 0.5)
        ax.set_ylim(-0.4, nrows + 0.4)
        ax.set_ylabel(f"track {track}")
        ax.set_yticks([])
    axes[0, 0].set_title(title, fontsize=10)
    fig.tight_layout()
    return fig
