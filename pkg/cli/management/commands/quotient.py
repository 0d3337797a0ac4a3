from cli.base import ValencyCommand
from valency.calculus import quotient_signature
from valency.schemas import QuotientSignatureOut


class Command(ValencyCommand):
    help = "Quotient genus and branch indices of the orbifold Σ/⟨f⟩."

    def add_command_arguments(self, parser):
        parser.add_argument("--tv", required=True)

    def run(self, **options):
        sig = quotient_signature(self.total_valency(options["tv"]))
        if self.as_json:
            payload = QuotientSignatureOut(quotient_genus=sig.quotient_genus, branch_indices=list(sig.branch_indices))
            self.emit_json("quotientSignature", payload.model_dump())
        else:
            self.stdout.write(str(sig))
