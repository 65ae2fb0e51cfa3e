from strings.helpers import COMPARE_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.bistellar import bistellar_equivalent, write_move_log
from vtmanifold.core.reference import parse_reference
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.fileio import read_complex


@app.on_command(
    "compare",
    option("first", help="complex file"),
    option("second", help="complex file, or a reference expression with --reference"),
    option("--reference", action="store_true", help="read SECOND as e.g. sum(torus7,torus7)"),
    option("--log-moves", help="write the applied moves as JSON lines"),
    help=COMPARE_HELP,
)
@language
async def compare_com(args, _):
    M1 = read_complex(args.first)
    M2 = parse_reference(args.second) if args.reference else read_complex(args.second)
    result = bistellar_equivalent(M1, M2, args.seed, args.budget)
    if result.equivalent:
        print(_["compare_1"].format(len(result.moves), result.flipped or "-"))
    else:
        print(_["compare_2"].format(len(result.moves)))
    if args.log_moves and result.moves:
        write_move_log(args.log_moves, result.moves)
        print(_["reduce_2"].format(len(result.moves), args.log_moves))
    return 0 if result.equivalent else 2
