"""Figure rendering for the combined verification report.

Takes the already-assembled report document (the same dict the JSON writer
receives) and produces small summary figures next to the delimited output:
containment-count uniformity, observed versus predicted deception
probabilities, and the distribution of source-intersection dimensions over
message pairs.  matplotlib is imported lazily so that non-report commands
never pay for it.
"""

from __future__ import annotations

from pathlib import Path


def _counts_axis(ax, doc: dict) -> None:
    labels = []
    expected = []
    observed = []
    for section, items in (("lemma6", ("a", "b")), ("lemma8", ("c", "d"))):
        for item in items:
            check = doc[section][item]
            labels.append(item)
            expected.append(int(check["expected"]))
            observed.append(int(check["max"]) if check["max"] is not None else 0)
    check = doc["lemma9"]
    labels.append("between")
    expected.append(int(check["expected"]))
    observed.append(int(check["max"]) if check["max"] is not None else 0)

    x = range(len(labels))
    width = 0.38
    ax.bar([i - width / 2 for i in x], expected, width, label="predicted", color="#4878d0")
    ax.bar([i + width / 2 for i in x], observed, width, label="measured max", color="#ee854a")
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels)
    ax.set_ylabel("count")
    ax.set_title("containment counts per object")
    ax.legend(frameon=False)


def _probability_axis(ax, doc: dict) -> None:
    keys = ["pI", "pS", "pT", "pR0", "pR1"]
    expected = []
    observed = []
    for key in keys:
        entry = doc["theorem2"][key]
        expected.append(float(entry["expectedDecimal"]))
        observed.append(float(entry["decimal"]) if entry["decimal"] is not None else 0.0)
    x = range(len(keys))
    width = 0.38
    ax.bar([i - width / 2 for i in x], expected, width, label="predicted", color="#4878d0")
    ax.bar([i + width / 2 for i in x], observed, width, label="measured", color="#ee854a")
    for i, key in enumerate(keys):
        if doc["theorem2"][key]["decimal"] is None:
            ax.annotate("n/a", (i + width / 2, 0.0), ha="center", va="bottom", fontsize=8)
    ax.set_xticks(list(x))
    ax.set_xticklabels(keys)
    ax.set_ylim(0, 1.05)
    ax.set_ylabel("success probability")
    ax.set_title("deception probabilities")
    ax.legend(frameon=False)


def _pair_axis(ax, doc: dict) -> bool:
    hist = doc["lemma10"]["kHistogram"]
    if not hist:
        return False
    ks = sorted(int(k) for k in hist)
    counts = [int(hist[str(k)]) for k in ks]
    ax.bar([str(k) for k in ks], counts, color="#4878d0")
    ax.set_xlabel("dim of source-state intersection")
    ax.set_ylabel("message pairs")
    ax.set_title("pairs sharing a transmitter rule")
    return True


def render_report_figures(doc: dict, stem: str | Path) -> list[Path]:
    """Write the summary figures for a report document; returns the paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams.update({"figure.figsize": (5.4, 3.4), "figure.dpi": 130})
    stem = Path(stem)
    written = []

    fig, ax = plt.subplots()
    _counts_axis(ax, doc)
    fig.tight_layout()
    path = stem.with_name(stem.name + "_incidence.png")
    fig.savefig(path)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots()
    _probability_axis(ax, doc)
    fig.tight_layout()
    path = stem.with_name(stem.name + "_probabilities.png")
    fig.savefig(path)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots()
    if _pair_axis(ax, doc):
        fig.tight_layout()
        path = stem.with_name(stem.name + "_pair_dimensions.png")
        fig.savefig(path)
        written.append(path)
    plt.close(fig)

    return written
