from cli.base import ValencyCommand
from valency.calculus import inverse
from valency.codec import to_json_dict


class Command(ValencyCommand):
    help = "Total valency of f^-1."

    def add_command_arguments(self, parser):
        parser.add_argument("--tv", required=True)

    def run(self, **options):
        t = inverse(self.total_valency(options["tv"]))
        if self.as_json:
            self.emit_json("totalValency", to_json_dict(t))
        else:
            self.stdout.write(str(t))
