"""Max-plus automata, tropical matrix semigroups, and their reductions.

Objects cross the boundary in the same shapes as the structured file
formats of the ``tropik`` CLI:

* matrix: list of rows; entries are integers or the string ``"-inf"``
* automaton: ``{"alphabet", "dim", "mu": {symbol: matrix}, "initial", "final"}``
* family: ``{"dim", "generators": [matrix, ...]}``
* NFA: ``{"states": n, "transitions": [[q, "a", p], ...], "initial", "final"}``
* machine: ``{"states": [names], "t1_plus": [[p, q], ...],
  "t1_minus": [[p, zero_target, decrement_target], ...], "t2_plus",
  "t2_minus", "init", "halt"}`` with states referenced by name

Exact rationals come back as strings: ``"num/den"``, a plain integer when
the denominator is 1, or ``"-inf"``.
"""

from ._tropik import (
    brute_min_word,
    brute_rho,
    build_checker,
    certify_jsr_negative,
    critical_graph,
    encode_halting_word,
    evaluate,
    find_negative_word,
    hat_family,
    hat_matrix,
    is_all_initial_final,
    jsr_exact,
    jsr_upper_bound,
    mu_of_word,
    nfa_to_gamma,
    nfa_universal,
    normalized_closure,
    reduction_pipeline,
    run_machine,
    spectral_radius,
    star_extend,
    tilde_family,
    tilde_matrix,
    ultimate_rank,
    urk_exact,
)

__all__ = [
    "brute_min_word",
    "brute_rho",
    "build_checker",
    "certify_jsr_negative",
    "critical_graph",
    "encode_halting_word",
    "evaluate",
    "find_negative_word",
    "hat_family",
    "hat_matrix",
    "is_all_initial_final",
    "jsr_exact",
    "jsr_upper_bound",
    "mu_of_word",
    "nfa_to_gamma",
    "nfa_universal",
    "normalized_closure",
    "reduction_pipeline",
    "run_machine",
    "spectral_radius",
    "star_extend",
    "tilde_family",
    "tilde_matrix",
    "ultimate_rank",
    "urk_exact",
]
