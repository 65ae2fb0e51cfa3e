from strings.helpers import GROUPS_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.groups import FAMILIES, builtin_group, group_order, load_catalog
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.exceptions import GroupParamError


@app.on_command(
    "groups",
    option("--n", type=int, help="only groups of this degree"),
    option("--family", choices=FAMILIES, help="show a built-in family instead of the catalog"),
    option("--k", type=int, help="multiplier order for affine_frobenius"),
    help=GROUPS_HELP,
)
@language
async def groups_com(args, _):
    if args.family:
        if args.n is None:
            raise GroupParamError(_["groups_3"])
        params = {"k": args.k} if args.k is not None else {}
        groups = [builtin_group(args.family, args.n, **params)]
    else:
        groups = [G for G in load_catalog(args.catalog) if args.n is None or G.degree == args.n]
    if not groups:
        print(_["groups_1"].format(args.n))
        return 0
    for G in groups:
        print(
            _["groups_2"].format(
                G.label, G.name or "-", group_order(G), " ".join(G.generator_cycles())
            )
        )
