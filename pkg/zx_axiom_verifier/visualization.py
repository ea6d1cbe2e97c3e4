import logging
import matplotlib
import pandas as pd
import seaborn as sns

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402

from pathlib import Path
from typing  import Union

sns.set_theme()


def plot_bar_chart(df: pd.DataFrame, x: str, y: str, path: Union[str, Path], chart_title: Union[str, None] = None, top: Union[int, None] = None) -> Path:
    """Plot a bar chart of one column against another and save it to a file

    Args:
        df (pd.DataFrame): DataFrame to be plotted
        x (str): column for the bars
        y (str): column for the bar heights
        path (str | Path): image file to write; the format follows the suffix
        chart_title (str, optional): title of the chart. Defaults to None
        top (int, optional): only plot the first rows. Defaults to None, all rows

    Returns:
        Path: the written file
    """
    if top is not None:
        df = df[:top]

    plt.figure(figsize=(15, 10))

    sns.color_palette('bright')

    sns.barplot(x=x, y=y, data=df)

    if chart_title:
        plt.title(chart_title)

    plt.xticks(
        rotation=45,
        horizontalalignment='right',
        fontweight='light',
        fontsize='x-large'
    )

    path = Path(path)
    plt.savefig(path, bbox_inches='tight')
    plt.close()

    logging.info(f'chart saved to {path}')

    return path


def plot_family_counts(enumeration: pd.DataFrame, path: Union[str, Path], chart_title: Union[str, None] = None) -> Path:
    """Number of enumerated Euler equalities per family (unclassified ones under 'none')"""
    families = enumeration['family'].fillna('none').astype(str)
    counts = families.value_counts().rename_axis('family').reset_index(name='equalities').sort_values('family')

    return plot_bar_chart(counts, 'family', 'equalities', path, chart_title or 'Euler equalities per family')


def plot_rule_deviations(reports: pd.DataFrame, path: Union[str, Path], chart_title: Union[str, None] = None) -> Path:
    """Largest float deviation per rule of a soundness run"""
    df = reports.sort_values('max_deviation', ascending=False)

    return plot_bar_chart(df, 'rule', 'max_deviation', path, chart_title or 'Max float deviation per rule')
