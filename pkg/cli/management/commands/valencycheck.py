from cli.base import ValencyCommand
from valency.calculus import (
    harvey_check,
    involution_quotient_genus,
    is_involution_datum,
    is_irreducible,
    nielsen_check,
    quotient_signature,
)
from valency.core import valency_sum
from valency.schemas import CheckOut

CHECKS = ["nielsen", "harvey", "irreducible", "involution"]


class Command(ValencyCommand):
    help = "Run one predicate on a total valency (exposed as `check`)."

    def add_command_arguments(self, parser):
        parser.add_argument("check", choices=CHECKS)
        parser.add_argument("--tv", required=True)

    def run(self, **options):
        t = self.total_valency(options["tv"])
        check = options["check"]
        if check == "nielsen":
            total = valency_sum(t.valencies)
            result, detail = nielsen_check(t.valencies), {"sum": str(total)}
        elif check == "harvey":
            sig = quotient_signature(t)
            result = harvey_check(t.order, sig.quotient_genus, sig.branch_indices)
            detail = {"quotient_genus": sig.quotient_genus, "branch_indices": list(sig.branch_indices)}
        elif check == "irreducible":
            result = is_irreducible(t)
            detail = {"quotient_genus": t.quotient_genus, "multiple_orbits": t.size}
        else:
            result = is_involution_datum(t)
            detail = {"fixed_points": t.size, "quotient_genus": involution_quotient_genus(t)} if result else {}

        if self.as_json:
            self.emit_json("checkResult", CheckOut(check=check, result=result, detail=detail).model_dump())
        else:
            self.stdout.write(f"{check}: {'yes' if result else 'no'}")
