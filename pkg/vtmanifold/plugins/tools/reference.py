from strings.helpers import REFERENCE_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.reference import parse_reference
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.fileio import dump_complex, write_complex


@app.on_command(
    "reference",
    option("expression", help="e.g. cyclic(4,7), cross(3), sum(torus7,torus7)"),
    option("--gap", action="store_true", help="write the facet list in GAP syntax"),
    help=REFERENCE_HELP,
)
@language
async def reference_com(args, _):
    M = parse_reference(args.expression)
    if args.out:
        write_complex(M, args.out, args.gap)
        print(_["reference_1"].format(args.expression, args.out))
    else:
        print(dump_complex(M, args.gap), end="")
