import json

from strings.helpers import VERIFY_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.homology import format_homology
from vtmanifold.core.pipeline import verify_complex
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.fileio import read_complex
from vtmanifold.utils.formatters import format_fvector


@app.on_command(
    "verify",
    option("file", help="complex file: 'n d' then one facet per line"),
    option("--json", action="store_true", help="print the report as JSON"),
    help=VERIFY_HELP,
)
@language
async def verify_com(args, _):
    M = read_complex(args.file)
    result = verify_complex(M, args.seed, args.budget)
    if args.json:
        print(json.dumps(result.to_dict(), indent=1, ensure_ascii=False))
    else:
        print(result.summary())
        print(_["verify_1"].format(format_fvector(result.f_vector), result.euler))
        if result.homology is not None:
            print(_["verify_2"].format(format_homology(result.homology)))
        if result.poincare is not None:
            print(_["verify_3"].format(_["word_yes"] if result.poincare else _["word_no"]))
        for note in result.notes:
            print(_["verify_4"].format(note))
    if not result.is_manifold:
        return 1
    if result.assessment.undetermined:
        return 2
