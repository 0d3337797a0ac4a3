from cli.base import ValencyCommand
from valency.calculus import power
from valency.codec import to_json_dict


class Command(ValencyCommand):
    help = "Total valency of f^k."

    def add_command_arguments(self, parser):
        parser.add_argument("--tv", required=True, help="Total valency, e.g. \"[1,6; 1/6 + 1/3 + 1/2]\".")
        parser.add_argument("--k", type=int, required=True)

    def run(self, **options):
        t = power(self.total_valency(options["tv"]), options["k"])
        if self.as_json:
            self.emit_json("totalValency", to_json_dict(t))
        else:
            self.stdout.write(str(t))
