GROUPS_HELP = """List the transitive groups of the catalog, or build one of the
families cyclic, dihedral, symmetric, alternating and affine_frobenius."""

ORBITS_HELP = """Orbits of k-subsets under a group, or with --d the pruned
facet/ridge orbit incidence matrix the enumeration searches."""

REFERENCE_HELP = """Build a reference complex: simplex(d), cyclic(d,n), cross(k),
polygon(k), cone(X), join(X,Y), sum(X,Y), product(X,Y) and the named
fixtures torus7, torus9, rp2, octahedron, s2xs1."""

ENUMERATE_HELP = """Enumerate the combinatorial d-manifolds on n vertices that are
invariant under one transitive group. Exit code 2 when the search timed out."""

SWEEP_HELP = """Run every (n, d, group) task of the catalog into a census directory,
resuming checkpointed tasks with --resume. Exit code 2 when results are partial."""

REPORT_HELP = """Print census counts (spheres/non-spheres per n and d) or the
orbit table of every stored record."""

VERIFY_HELP = """Check a complex file for pseudomanifold and manifold properties and
try to identify it. Exit code 2 when the type stays undetermined."""

HOMOLOGY_HELP = """Integer homology of a complex file, optionally with Z2 ranks,
vertex-link homology and a presentation of the fundamental group."""

REDUCE_HELP = """Reduce a complex by bistellar flips. Exit code 0 when it reaches the
boundary of a simplex, 2 otherwise."""

COMPARE_HELP = """Search for a bistellar flip sequence between two complexes.
Exit code 2 means undetermined, which is not a proof of inequivalence."""
