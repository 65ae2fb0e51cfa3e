from strings.helpers import ENUMERATE_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.enumerate import EnumerationOptions, run_enumeration
from vtmanifold.core.groups import find_group, load_catalog
from vtmanifold.core.pipeline import annotate
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.fileio import append_jsonl
from vtmanifold.utils.formatters import format_fvector


@app.on_command(
    "enumerate",
    option("--n", type=int, required=True),
    option("--d", type=int, required=True),
    option("--group", required=True, help="catalog label, catalog name or family such as D7"),
    option("--checkpoint", help="search state file, written periodically and on timeout"),
    option("--budget-seconds", type=float, help="stop the search after this many seconds"),
    option("--trace", action="store_true", help="print every search step"),
    option("--assess", action="store_true", help="also compute homology and verdicts"),
    help=ENUMERATE_HELP,
)
@language
async def enumerate_com(args, _):
    G = find_group(load_catalog(args.catalog), args.group)
    options = EnumerationOptions(
        trace=print if args.trace else None,
        checkpoint=args.checkpoint,
        resume=args.resume,
        budget_seconds=args.budget_seconds,
    )
    result = run_enumeration(args.n, args.d, G, options)
    for record, M in zip(result.records, result.complexes):
        if args.assess:
            annotate(record, M, args.seed, args.budget)
        print(
            _["enum_3"].format(
                record.symbol, format_fvector(record.f_vector), record.orbit_text(), record.status
            )
        )
    if args.out:
        append_jsonl(args.out, [r.to_dict() for r in result.records])
    print(_["enum_1"].format(G.label, args.d, result.emissions, len(result.records), result.nodes))
    if result.timed_out:
        print(_["enum_2"].format(args.checkpoint or "-"))
        return 2
