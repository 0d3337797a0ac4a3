from cli.base import ValencyCommand
from census.centralizer import centralizer_structure
from census.schemas import centralizer_out


class Command(ValencyCommand):
    help = "Centralizer trichotomy of an irreducible action."

    def add_command_arguments(self, parser):
        parser.add_argument("--tv", required=True)

    def run(self, **options):
        report = centralizer_structure(self.total_valency(options["tv"]))
        if self.as_json:
            self.emit_json("centralizerReport", centralizer_out(report).model_dump())
            return
        line = f"{report.tag.value}  {report.enclosing_group}"
        if report.parity:
            line += f"  n = {'2g+1' if report.parity == 'odd' else '2g+2'}, f = h_{{{report.total_valency.order},1}}^{report.hnp_exponent}"
        self.stdout.write(line)
