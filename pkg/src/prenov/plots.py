"""Figure rendering for the CLI report paths.

Every report command can drop a matplotlib figure next to its delimited
output; these helpers keep all of that in one place.  The Agg backend is
forced so the tool works headless.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_matrix_figure(matrix, col_labels, row_labels, path, title=""):
    """Annotated heatmap of a small exact matrix (integers expected)."""
    data = [[float(x) for x in row] for row in matrix.rows]
    n, m = len(data), len(data[0]) if data else 0
    fig, ax = plt.subplots(figsize=(max(6, 0.55 * m), max(5, 0.45 * n)))
    im = ax.imshow(data, cmap="Blues")
    ax.set_xticks(range(m))
    ax.set_xticklabels(col_labels, rotation=60, ha="right", fontsize=7)
    ax.set_yticks(range(n))
    ax.set_yticklabels(row_labels, fontsize=7)
    vmax = max((abs(v) for row in data for v in row), default=1)
    for i, row in enumerate(data):
        for j, v in enumerate(row):
            if v:
                color = "white" if abs(v) > 0.6 * vmax else "black"
                ax.text(j, i, f"{v:g}", ha="center", va="center", fontsize=7, color=color)
    if title:
        ax.set_title(title)
    fig.colorbar(im, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_dims_figure(varieties_table, path, title="multilinear dimensions"):
    """Line chart of dimension vs arity; one line per (variety, source)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, points in varieties_table.items():
        arities = sorted(points)
        ax.plot(arities, [points[a] for a in arities], marker="o", label=label)
    ax.set_xlabel("arity")
    ax.set_ylabel("dimension")
    ax.set_yscale("log")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_relations_figure(result, rank, kernel_dim, path):
    """Sparsity pattern of the evaluation matrix with the rank summary."""
    fig, axes = plt.subplots(1, 2, figsize=(10, 4.5), width_ratios=[3, 1])
    spy, bars = axes
    xs, ys = [], []
    for i, row in enumerate(result.matrix.rows):
        for j, v in enumerate(row):
            if v:
                xs.append(j)
                ys.append(i)
    spy.scatter(xs, ys, s=4, marker="s", color="navy")
    spy.invert_yaxis()
    spy.set_xlabel(f"{result.matrix.ncols} basis words")
    spy.set_ylabel(f"{result.matrix.nrows} monomials")
    spy.set_title(f"evaluation matrix, {result.variety} arity {result.arity}")
    labels = ["monomials", "rank", "kernel"]
    values = [result.matrix.nrows, rank, kernel_dim]
    bars.bar(labels, values, color=["#888", "navy", "#c44"])
    for x, v in enumerate(values):
        bars.text(x, v, str(v), ha="center", va="bottom")
    bars.set_title("dimensions")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
