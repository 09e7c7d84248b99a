import logging
from collections import defaultdict
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from graphs.exceptions import CapacityError, DimensionError, InvalidParameterError
from graphs.formats import parse_graph_rows
from graphs.models import DirectedGraph, Permutation
from graphs.utils import (
    add_edge,
    complete_graph,
    cycle_graph,
    enumerate_graphs,
    enumerate_permutations,
    graph_to_permutation,
    identity_graph,
    permutation_to_graph,
)
from permanent.utils import contains_some_permutation, cycle_polynomial, evaluate, stirling_cycle_numbers
from pgm.models import PgmParams, SupportFamily
from pgm.utils import check_family_capacity, normalizer, resolve_family
from projection.models import ProjectionOp
from projection.utils import preimages, project
from .models import BivariatePolynomial, CheckMode, LtpVerdict, Verdict
from .schemas import ChainReportDocument, ChainStepDocument

logger = logging.getLogger(__name__)

G1 = parse_graph_rows(("0100", "1010", "0101", "1010"))
G2 = parse_graph_rows(("0100", "0010", "1101", "1001"))

RHS_MAX_N = {ProjectionOp.DELETE_AND_REPAIR: 4, ProjectionOp.SUBSELECTION: 6}
DENOMINATOR_MAX_N = 10
EXHAUSTIVE_CHECK_MAX_N = 3
WITNESS_PAIR_N = 4
CHAIN_MAX_N = 6

ZERO = BivariatePolynomial()


def weight_polynomial(graph: DirectedGraph) -> BivariatePolynomial:
    """
    beta^#G per_alpha(G) with alpha and beta left symbolic
    """
    return BivariatePolynomial.from_cycle_polynomial(cycle_polynomial(graph), graph.edge_count)


def denominator(graph: DirectedGraph, alpha: Fraction, beta: Fraction, allow_large: bool = False) -> Fraction:
    if graph.n > DENOMINATOR_MAX_N and not allow_large:
        raise CapacityError(f"Denominators are limited to n <= {DENOMINATOR_MAX_N}, got n = {graph.n}")
    return Fraction(beta) ** graph.edge_count * evaluate(cycle_polynomial(graph, allow_large), alpha)


def _accumulate(members: Iterable[DirectedGraph]) -> BivariatePolynomial:
    terms: Dict[Tuple[int, int], int] = defaultdict(int)
    for member in members:
        for monomial, c in weight_polynomial(member):
            terms[monomial] += c
    return BivariatePolynomial.from_mapping(terms)


def _check_rhs_capacity(graph: DirectedGraph, op: str, allow_large: bool) -> None:
    if op not in RHS_MAX_N:
        raise ValueError(f"Unknown projection {op!r}")
    if graph.n > RHS_MAX_N[op] and not allow_large:
        raise CapacityError(
            f"The {op} right-hand side is limited to n <= {RHS_MAX_N[op]}, got n = {graph.n}"
        )


def ltp_rhs(
    graph: DirectedGraph,
    op: str = ProjectionOp.DELETE_AND_REPAIR,
    family=None,
    threads: int = 1,
    allow_large: bool = False,
) -> BivariatePolynomial:
    """
    Sum of beta'^#G' per_alpha'(G') over the (n+1)-graphs of the family that
    project onto the graph, as a polynomial in (alpha', beta')
    """
    _check_rhs_capacity(graph, op, allow_large)
    family = resolve_family(family)
    if family.exhaustive:
        members = preimages(graph, op, threads=threads, allow_large=allow_large)
    else:
        check_family_capacity(family, graph.n + 1, allow_large)
        members = (m for m in family.members(graph.n + 1) if project(m, op) == graph)
    return _accumulate(members)


def ltp_rhs_dr(graph: DirectedGraph, threads: int = 1, allow_large: bool = False) -> BivariatePolynomial:
    return ltp_rhs(graph, ProjectionOp.DELETE_AND_REPAIR, None, threads, allow_large)


def dr_difference_certificate(threads: int = 1) -> BivariatePolynomial:
    """
    RHS(G2) - RHS(G1). G1 and G2 share their denominator, so the law of
    total probability needs this to vanish; every coefficient is positive.
    """
    return ltp_rhs_dr(G2, threads) - ltp_rhs_dr(G1, threads)


def ltp_rhs_ss_split(graph: DirectedGraph) -> BivariatePolynomial:
    """
    Subselection RHS split on whether the new vertex is a fixed point:
    beta^(#G+1) (1+beta)^(2n) alpha per_alpha(G)
    + beta^(#G+2) (1+beta)^(2n-1) sum_sigma alpha^#sigma #{i : sigma minus i -> sigma(i) lies in G}
    """
    n, edges = graph.n, graph.edge_count
    fixed = (
        BivariatePolynomial.monomial(1, edges + 1)
        * BivariatePolynomial.one_plus_beta(2 * n)
        * BivariatePolynomial.from_cycle_polynomial(cycle_polynomial(graph), 0)
    )
    moved: Dict[Tuple[int, int], int] = defaultdict(int)
    for sigma in enumerate_permutations(n):
        missing = sum(1 for i in range(n) if not graph.has_edge(i, sigma(i)))
        if missing <= 1:
            moved[(sigma.cycle_count, 0)] += n if missing == 0 else 1
    return fixed + (
        BivariatePolynomial.from_mapping(moved)
        * BivariatePolynomial.monomial(0, edges + 2)
        * BivariatePolynomial.one_plus_beta(2 * n - 1)
    )


def ss_closed_form(n: int, edges: int) -> BivariatePolynomial:
    """
    beta^(#G+1) (1+beta)^(2n-1) alpha_{n^1} [alpha (1+beta) + n beta], which
    equals the subselection RHS when every sigma fits in the graph
    """
    rising = BivariatePolynomial.from_mapping(
        {(k, 0): c for k, c in enumerate(stirling_cycle_numbers(n), start=1)}
    )
    bracket = BivariatePolynomial.from_mapping({(1, 0): 1, (1, 1): 1, (0, 1): n})
    return (
        BivariatePolynomial.monomial(0, edges + 1)
        * BivariatePolynomial.one_plus_beta(2 * n - 1)
        * rising
        * bracket
    )


def _candidates(
    family: SupportFamily, n: int, graphs: Optional[Sequence[DirectedGraph]], allow_large: bool
) -> List[DirectedGraph]:
    if graphs is not None:
        for graph in graphs:
            if graph.n != n:
                raise DimensionError(f"A {graph.n}-graph in a check at n = {n}")
        return list(graphs)
    if not family.exhaustive:
        check_family_capacity(family, n, allow_large)
        return list(family.members(n))
    if n <= EXHAUSTIVE_CHECK_MAX_N:
        return list(enumerate_graphs(n))
    if n == WITNESS_PAIR_N:
        return [G1, G2]
    raise CapacityError(
        f"Checks over all graphs run exhaustively for n <= {EXHAUSTIVE_CHECK_MAX_N} "
        f"and on the G1/G2 pair at n = {WITNESS_PAIR_N}"
    )


def _rhs_by_graph(
    candidates: List[DirectedGraph],
    op: str,
    family: SupportFamily,
    n: int,
    threads: int,
    allow_large: bool,
) -> Tuple[Dict[DirectedGraph, BivariatePolynomial], Optional[DirectedGraph]]:
    """
    Either push every (n+1)-member of the family forward through the
    projection, which also finds members landing outside the family, or
    expand the preimages of each candidate when the level above is too big
    to enumerate
    """
    if family.exhaustive and n > EXHAUSTIVE_CHECK_MAX_N:
        return {graph: ltp_rhs(graph, op, family, threads, allow_large) for graph in candidates}, None
    check_family_capacity(family, n + 1, allow_large)
    logger.info("Pushing the %s family at n = %d forward through %s", family.tag, n + 1, op)
    terms: Dict[DirectedGraph, Dict[Tuple[int, int], int]] = defaultdict(lambda: defaultdict(int))
    leak = None
    leak_rank = None
    for member in family.members(n + 1, allow_large):
        weight = weight_polynomial(member)
        if not weight:
            continue
        target = project(member, op)
        if not family.contains(target):
            rank = _leak_rank(member)
            if leak is None or rank < leak_rank:
                leak, leak_rank = member, rank
            continue
        for monomial, c in weight:
            terms[target][monomial] += c
    return {graph: BivariatePolynomial.from_mapping(terms.get(graph, {})) for graph in candidates}, leak


def _leak_rank(member: DirectedGraph) -> int:
    """
    Cycle count of a permutation member, so single cycles win; 0 for other graphs
    """
    sigma = graph_to_permutation(member)
    return 0 if sigma is None else sigma.cycle_count


def ltp_check(
    op: str,
    n: int,
    params: Optional[Sequence[PgmParams]] = None,
    family=None,
    graphs: Optional[Sequence[DirectedGraph]] = None,
    threads: int = 1,
    allow_large: bool = False,
) -> LtpVerdict:
    """
    Check P_n(G) = sum over the preimages G' of P_{n+1}(G') for every
    candidate graph.

    With ``params`` = (level n, level n+1) the identity is checked exactly at
    that point. Without them (alpha_n, beta_n) and (alpha_{n+1}, beta_{n+1})
    stay symbolic: graphs with proportional denominators must have RHS
    polynomials in the same proportion, and a difference with all
    coefficients of one sign rules out every positive parameter choice.
    """
    if op not in ProjectionOp.choices:
        raise ValueError(f"Unknown projection {op!r}")
    family = resolve_family(family)
    if params is not None:
        if len(params) != 2:
            raise InvalidParameterError("A point check takes the parameters of levels n and n + 1")
        if params[0].n != n or params[1].n != n + 1:
            raise DimensionError(f"Parameters for levels {params[0].n} and {params[1].n}, expected {n} and {n + 1}")
    candidates = _candidates(family, n, graphs, allow_large)
    rhs, leak = _rhs_by_graph(candidates, op, family, n, threads, allow_large)
    denominators = {
        graph: weight_polynomial(graph) if family.contains(graph) else ZERO for graph in candidates
    }
    mode = CheckMode.POLYNOMIAL if params is None else CheckMode.POINT
    base = dict(mode=mode, op=op, family=family.tag, n=n, checked=len(candidates))
    if leak is not None:
        image = project(leak, op)
        return LtpVerdict(
            Verdict.FAIL,
            witness=(leak, image),
            parameter_free=True,
            message=f"An {n + 1}-graph of the {family.tag} family projects outside the family",
            **base,
        )
    if params is None:
        return _polynomial_verdict(candidates, rhs, denominators, base)
    return _point_verdict(candidates, rhs, denominators, params, family, allow_large, base)


def _point_verdict(candidates, rhs, denominators, params, family, allow_large, base) -> LtpVerdict:
    lower, upper = params
    z_lower = normalizer(lower, family, allow_large)
    z_upper = normalizer(upper, family, allow_large)
    failing = None
    ratios = []
    for graph in candidates:
        below = denominators[graph].evaluate(lower.alpha, lower.beta)
        above = rhs[graph].evaluate(upper.alpha, upper.beta)
        if failing is None and below / z_lower != above / z_upper:
            failing = (graph, below / z_lower, above / z_upper)
        if below:
            ratios.append((graph, above / below))
    if failing is None:
        return LtpVerdict(Verdict.PASS, message="The identity holds for every graph checked", **base)
    graph, lhs, total = failing
    pair = next(((ratios[0][0], g) for g, ratio in ratios[1:] if ratio != ratios[0][1]), None)
    return LtpVerdict(
        Verdict.FAIL,
        witness=pair or (graph,),
        message="The preimage mass differs from the probability at level n",
        details={"lhs": f"{lhs.numerator}/{lhs.denominator}", "rhs": f"{total.numerator}/{total.denominator}"},
        **base,
    )


def _polynomial_verdict(candidates, rhs, denominators, base) -> LtpVerdict:
    groups: Dict[BivariatePolynomial, List[DirectedGraph]] = {}
    for graph in candidates:
        if not denominators[graph]:
            if rhs[graph]:
                return LtpVerdict(
                    Verdict.FAIL,
                    witness=(graph,),
                    certificate=rhs[graph],
                    parameter_free=True,
                    message="A graph of probability zero has preimages of positive probability",
                    **base,
                )
            continue
        groups.setdefault(denominators[graph].primitive(), []).append(graph)
    undecided = None
    for members in groups.values():
        reference = members[0]
        for graph in members[1:]:
            c = denominators[graph].ratio_to(denominators[reference])
            difference = rhs[graph] * c.denominator - rhs[reference] * c.numerator
            if not difference:
                continue
            if difference.is_sign_definite():
                return LtpVerdict(
                    Verdict.FAIL,
                    witness=(reference, graph),
                    certificate=difference if difference.is_parameter_free() else -difference,
                    parameter_free=True,
                    message="Two graphs with proportional denominators have RHS polynomials "
                    "out of proportion for every positive parameter choice",
                    **base,
                )
            undecided = undecided or (reference, graph)
    if undecided is None and len(groups) > 1:
        heads = [members[0] for members in groups.values()]
        undecided = (heads[0], heads[1])
    if undecided is not None:
        return LtpVerdict(
            Verdict.INCONCLUSIVE,
            witness=undecided,
            message="The identity cannot hold identically; check a parameter point instead",
            **base,
        )
    return LtpVerdict(Verdict.PASS, message="The identity holds for every parameter choice", **base)


def _f_polynomial(graph: DirectedGraph, alpha, ratio):
    """
    (beta_n / beta_{n+1})^#G per_alpha(G) as a sympy expression
    """
    return ratio**graph.edge_count * sum(
        c * alpha**k for k, c in enumerate(cycle_polynomial(graph).coeffs, start=1)
    )


def _split_step(n: int, threads: int, allow_large: bool) -> ChainStepDocument:
    graphs = (
        list(enumerate_graphs(n))
        if n <= EXHAUSTIVE_CHECK_MAX_N
        else [complete_graph(n), cycle_graph(n), identity_graph(n)]
    )
    split_holds = closed_form_holds = 0
    bounds_hold = True
    fewest, most = None, None
    for graph in graphs:
        rhs = ltp_rhs(graph, ProjectionOp.SUBSELECTION, threads=threads, allow_large=allow_large)
        split_holds += rhs == ltp_rhs_ss_split(graph)
        closed_form_holds += rhs == ss_closed_form(n, graph.edge_count)
        if not rhs:
            continue
        exponents = [j - graph.edge_count for (_, j), _ in rhs]
        low, high = min(exponents), max(exponents)
        fewest = low if fewest is None else min(fewest, low)
        most = high if most is None else max(most, high)
        expected_low = 1 if contains_some_permutation(graph) else 2
        bounds_hold = bounds_hold and low == expected_low and high == 2 * n + 1
    complete = complete_graph(n)
    on_complete = ltp_rhs(complete, ProjectionOp.SUBSELECTION, threads=threads) == ss_closed_form(
        n, complete.edge_count
    )
    return ChainStepDocument(
        name="split",
        statement="The subselection RHS splits on sigma'(n+1) = n+1; the G-free closed form "
        "beta^(#G+1)(1+beta)^(2n-1) alpha_{n^1}[alpha(1+beta) + n beta] holds on the complete graph",
        passed=split_holds == len(graphs) and on_complete and bounds_hold,
        values={
            "graphs": str(len(graphs)),
            "split_holds": str(split_holds),
            "closed_form_holds": str(closed_form_holds),
            "closed_form_on_complete_graph": str(on_complete),
            "fewest_extra_edges": str(fewest),
            "most_extra_edges": str(most),
        },
    )


def _alpha_step(n: int) -> ChainStepDocument:
    alpha, ratio = sympy.symbols("alpha ratio", positive=True)
    first = cycle_graph(n)
    second = permutation_to_graph(Permutation.from_cycles(n, [[0], list(range(1, n))]))
    f_first, f_second = _f_polynomial(first, alpha, ratio), _f_polynomial(second, alpha, ratio)
    roots = sympy.solve(sympy.Eq(f_first, f_second), alpha)
    return ChainStepDocument(
        name="alpha",
        statement="f(G) = (beta_n/beta_{n+1})^#G per_alpha(G) equal on the n-cycle and (1)(2..n) forces alpha = 1",
        passed=roots == [1],
        values={"f_cycle": str(f_first), "f_fixed_point": str(f_second), "positive_roots": str(roots)},
    )


def _beta_step(n: int) -> ChainStepDocument:
    ratio = sympy.Symbol("ratio", positive=True)
    first = cycle_graph(n)
    second = add_edge(first, n - 1, n - 1)
    f_first, f_second = _f_polynomial(first, 1, ratio), _f_polynomial(second, 1, ratio)
    roots = sympy.solve(sympy.Eq(f_first, f_second), ratio)
    return ChainStepDocument(
        name="beta",
        statement="At alpha = 1, f equal on the n-cycle with and without a loop at n forces beta_n / beta_{n+1} = 1",
        passed=roots == [1],
        values={"f_cycle": str(f_first), "f_cycle_with_loop": str(f_second), "positive_roots": str(roots)},
    )


def _constancy_step(n: int) -> ChainStepDocument:
    beta = sympy.Symbol("beta", positive=True)
    required = 1 + n * beta / (1 + beta)
    on_cycle = cycle_polynomial(cycle_graph(n)).permutation_count
    on_complete = cycle_polynomial(complete_graph(n)).permutation_count
    return ChainStepDocument(
        name="constancy",
        statement="With alpha = 1 and beta constant, per_1(G) must equal 1 + n beta/(1+beta) for every G",
        passed=on_cycle != on_complete,
        values={
            "required": str(required),
            "per_1_cycle": str(on_cycle),
            "per_1_complete": str(on_complete),
            "expected_per_1_complete": str(factorial(n)),
            "beta_for_cycle": str(sympy.solve(sympy.Eq(required, on_cycle), beta)),
            "beta_for_complete": str(sympy.solve(sympy.Eq(required, on_complete), beta)),
        },
    )


def ss_contradiction_chain(n: int, threads: int = 1, allow_large: bool = False) -> ChainReportDocument:
    """
    Replay the subselection refutation at size n, one entry per step
    """
    if n < 2:
        raise InvalidParameterError("The subselection chain compares n-graphs for n >= 2")
    if n > CHAIN_MAX_N and not allow_large:
        raise CapacityError(f"The subselection chain is limited to n <= {CHAIN_MAX_N}")
    steps = [
        _split_step(n, threads, allow_large),
        _alpha_step(n),
        _beta_step(n),
        _constancy_step(n),
    ]
    for step in steps:
        logger.info("Step %s: %s", step.name, "holds" if step.passed else "fails")
    return ChainReportDocument(n=n, passed=all(step.passed for step in steps), steps=steps)
