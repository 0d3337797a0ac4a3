from cli.base import ValencyCommand, dump_json
from cli.schemas import OracleOut
from polygon.surface import build_surface, oracle_total_valency, surface_dump
from valency.calculus import hnp, power
from valency.codec import to_json_dict


class Command(ValencyCommand):
    help = "Total valency of h_{n,p}^k computed on the glued 2n-gon."

    def add_command_arguments(self, parser):
        parser.add_argument("--n", type=int, required=True)
        parser.add_argument("--p", type=int, required=True)
        parser.add_argument("--k", type=int, default=1)
        parser.add_argument("--compare", action="store_true", help="Compare with the closed form.")
        parser.add_argument("--dump", action="store_true", help="Print the gluing and orbit table as JSON.")

    def run(self, **options):
        n, p, k = options["n"], options["p"], options["k"]
        surface = build_surface(n, p)
        if options["dump"]:
            self.stdout.write(dump_json(surface_dump(surface, k)))
            return
        got = oracle_total_valency(surface, k)
        closed = power(hnp(n, p), k)
        match = got == closed if options["compare"] else None

        if self.as_json:
            payload = OracleOut(
                n=n, p=p, k=k, genus=surface.genus,
                total_valency=to_json_dict(got), text=str(got), closed_form=str(closed), match=match,
            )
            self.emit_json("oracleResult", payload.model_dump(by_alias=True))
        elif match is None:
            self.stdout.write(str(got))
        else:
            self.stdout.write("MATCH" if match else "MISMATCH")
        if match is False:
            raise self.mismatch(f"oracle {got} != closed form {closed}")
