"""Authorship-pattern analysis of bibliographic corpora.

Builds the paper-author bipartite graph and the co-authorship graph of a
corpus and computes degree statistics, log-log power-law fits, the
productivity/collaboration correlation, attribute assortativity,
connected components and cumulative growth trends.
"""

from .bigraph import (
    BipartiteGraph,
    DegreeStats,
    author_degrees,
    authors_per_paper_stats,
    build_pag,
    paper_degrees,
    papers_per_author_stats,
    top_authors_by_papers,
)
from .coauthor import (
    CoauthorGraph,
    Component,
    build_cag,
    build_cag_from_corpus,
    coauthor_degrees,
    coauthors_per_author_stats,
    components,
    top_authors_by_coauthors,
)
from .corpus import AuthorKey, Corpus, PaperRecord, YearSummary, corpus_summary, dump_jsonl, load_corpus, normalize_name, parse_corpus
from .errors import (
    AuthorshipError,
    DegenerateFit,
    DuplicatePaperId,
    EmptyCorpus,
    MalformedName,
    ParseError,
    UndefinedCorrelation,
    UndefinedMixing,
)
from .mixing import Attribute, MixingResult, assortativity, mixing_matrix, mixing_plot_data, productivity_collaboration_correlation
from .powerfit import FrequencyDistribution, PowerLawFit, fit_power_law, frequency_distribution, lotka_comparison
from .report import ReportBundle, analyze
from .trend import TrendFit, fit_trend

__version__ = "0.1.0"
