"""Helper functions for plotting benchmark results."""

from os import PathLike

import matplotlib.pyplot as plt
import pandas as pd


def scalingplot(table, ax=None, **kwargs):
    """Plot the running time of each engine against the number of tasks on log-log axes.

    :param DataFrame table: A benchmark table indexed by task count with `<engine>_s` columns.
    :param Axes, optional ax: The Axes on which to draw the scaling plot.
    """
    if ax is None:
        ax = plt.gca()
    for column in (name for name in table.columns if name.endswith("_s")):
        ax.loglog(table.index, table[column], marker="o", label=column.removesuffix("_s"), **kwargs)
    ax.set_xlabel("tasks")
    ax.set_ylabel("time (s)")
    ax.legend()
    return ax


def savescaling(table: pd.DataFrame, filename: str | PathLike) -> None:
    """Saves a scaling plot of a benchmark table to the specified image file."""
    fig, ax = plt.subplots()
    scalingplot(table, ax=ax)
    fig.savefig(filename)
    plt.close(fig)
