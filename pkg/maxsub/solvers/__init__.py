from .baseline import guided_random_greedy, local_search, random_greedy, sample_greedy, warmup_solve
from .bounds import BoundParams, evaluate_bound, guarantee_coefficients, optimize_bound_params
from .config import FLIP_POINT_DEFAULT, PMode, SolverConfig
from .fast import (
    FastLocalSearchResult, LocalOptReport, MainResult, check_local_opt_condition, fast_local_search,
    guided_stochastic_greedy, init_solution, query_budget_per_attempt, solve_main, solve_main_detailed,
)
from .registry import SOLVER_CHOICES, run_solver
