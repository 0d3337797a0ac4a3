from cli.base import ValencyCommand
from valency.calculus import hnp, hnp_notes
from valency.codec import to_json_dict
from valency.schemas import HnpOut


class Command(ValencyCommand):
    help = "Total valency of h_{n,p}."

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--p", type=int, required=True)

    def run(self, **options):
        n, p = options["n"], options["p"]
        t = hnp(n, p)
        notes = hnp_notes(n, p)
        if self.as_json:
            payload = HnpOut(n=n, p=p, total_valency=to_json_dict(t), text=str(t), notes=notes)
            self.emit_json("hnpResult", payload.model_dump(by_alias=True))
            return
        self.stdout.write(str(t))
        for note in notes:
            self.stderr.write(f"note: {note}")
