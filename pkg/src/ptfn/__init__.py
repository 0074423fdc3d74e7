"""PTFN sieve and Sprague-Grundy solvers for impartial subtraction games."""
from .analysis import (
    AgreementFailure,
    BenchReport,
    NoLegalMove,
    NoWinningMove,
    PeriodReport,
    TableTooShort,
    WinningMove,
    advise_move,
    bench_compare,
    detect_period,
)
from .core import (
    EmptySet,
    GameError,
    IndexOutOfRange,
    Label,
    NonPositiveEntry,
    PlayConvention,
    SubtractionSet,
    TableTooLarge,
    mex,
    validate_set,
)
from .grundy import GrundyTable, grundy_table, labels_from_grundy, sum_label_xor
from .multipile import (
    BeattyPair,
    GridTable,
    SumOfTwo,
    Wythoff,
    grid_cross_check,
    ptfn_two_pile,
    wythoff_analytic,
    wythoff_sieve,
)
from .oracle import BoundExceeded, minimax_label_1d, minimax_label_grid
from .sieve import PositionTable, ptfn_misere, ptfn_normal

__version__ = "0.1.0"
