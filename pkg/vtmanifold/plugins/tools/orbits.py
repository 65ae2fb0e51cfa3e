from collections import Counter

from strings.helpers import ORBITS_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.groups import find_group, load_catalog
from vtmanifold.core.orbits import build_incidence, orbits_of_k_subsets
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.exceptions import SubsetSizeError
from vtmanifold.utils.formatters import format_orbit, format_subset, format_vector, row_name


@app.on_command(
    "orbits",
    option("--group", required=True, help="catalog label, catalog name or family such as D7"),
    option("--k", type=int, help="subset size"),
    option("--d", type=int, help="print the pruned incidence matrix for dimension d"),
    option("--sizes", action="store_true", help="only print the orbit size multiset"),
    help=ORBITS_HELP,
)
@language
async def orbits_com(args, _):
    G = find_group(load_catalog(args.catalog), args.group)
    if args.d is not None:
        inc = build_incidence(G, args.d)
        rows, cols = inc.shape
        print(_["orbits_3"].format(G.label, args.d, rows, cols))
        print("   " + " ".join(format_subset(r.representative) for r in inc.ridge_orbits))
        for i, (orbit, line) in enumerate(zip(inc.facet_orbits, inc.dense().tolist())):
            rep = format_orbit(orbit.representative, orbit.size)
            print(f"{row_name(i, rows)}: {format_vector(line)}  {rep}")
        return 0
    if args.k is None:
        raise SubsetSizeError(_["orbits_4"])
    orbits = orbits_of_k_subsets(G, args.k)
    print(_["orbits_1"].format(G.label, len(orbits), args.k))
    if args.sizes:
        sizes = Counter(o.size for o in orbits)
        print(", ".join(f"{size}x{count}" for size, count in sorted(sizes.items(), reverse=True)))
        return 0
    for o in orbits:
        print(format_orbit(o.representative, o.size))
