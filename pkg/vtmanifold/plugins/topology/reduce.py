from strings.helpers import REDUCE_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.bistellar import links_are_spheres, reduce, write_move_log
from vtmanifold.core.complex import f_vector
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.fileio import read_complex, write_complex
from vtmanifold.utils.formatters import format_fvector


@app.on_command(
    "reduce",
    option("file", help="complex file: 'n d' then one facet per line"),
    option("--link", type=int, help="reduce the link of this vertex instead"),
    option("--log-moves", help="write the applied moves as JSON lines"),
    help=REDUCE_HELP,
)
@language
async def reduce_com(args, _):
    M = read_complex(args.file)
    if args.link is not None:
        result = links_are_spheres(M, args.seed, args.budget, args.link)
    else:
        result = reduce(M, args.seed, args.budget)
    print(
        _["reduce_1"].format(
            result.verdict.value, result.moves_used, format_fvector(f_vector(result.complex))
        )
    )
    if args.log_moves:
        write_move_log(args.log_moves, result.moves)
        print(_["reduce_2"].format(len(result.moves), args.log_moves))
    if args.out:
        write_complex(result.complex, args.out)
    return 0 if result.is_sphere else 2
