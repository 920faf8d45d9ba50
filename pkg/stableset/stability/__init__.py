from .roots import (
    ISOLATION_EPS,
    IsolatedRoot,
    RealRootednessVerdict,
    compare_roots,
    count_real_roots,
    count_real_roots_with_multiplicity,
    interlaces,
    is_real_rooted,
    isolate_real_roots,
    largest_root_below,
)
from .probes import (
    CORROBORATED,
    REFUTED,
    ProbeVerdict,
    claw_witness_restriction,
    common_interlacing_probe,
    hypergraph_witness_restriction,
    rayleigh_difference,
    same_phase_compatible_probe,
    same_phase_probe,
    sample_rays,
    shifted_ray_probe,
    shifted_restriction,
    strongly_rayleigh_probe,
)
from .decide import (
    decide_hypergraph_same_phase,
    decide_real_stable_independence,
    decide_same_phase_stable_independence,
    find_induced_p3,
)
