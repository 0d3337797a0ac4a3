from django.conf import settings

from census.enumeration import EnumerationQuery, enumerate_census
from census.schemas import census_entry_out
from cli.base import ValencyCommand


class Command(ValencyCommand):
    help = "Census of admissible total valencies of a genus."

    def add_command_arguments(self, parser):
        parser.add_argument("--genus", type=int, required=True)
        parser.add_argument("--order", type=int)
        parser.add_argument("--quotient-genus", type=int, dest="quotient_genus")
        parser.add_argument("--irreducible", action="store_true")
        parser.add_argument("--max-order", type=int, dest="max_order", help="Largest order searched (default 4g+2).")

    def run(self, **options):
        query = EnumerationQuery(
            genus=options["genus"],
            order=options.get("order"),
            quotient_genus=options.get("quotient_genus"),
            require_irreducible=options["irreducible"],
            max_order=options.get("max_order"),
        )
        entries = enumerate_census(
            query,
            time_limit_sec=settings.VALENCY_SOLVER_TIME_LIMIT,
            witness_from_oracle=settings.VALENCY_WITNESS_FROM_ORACLE,
        )
        for entry in entries:
            if self.as_json:
                self.emit_json("censusEntry", census_entry_out(entry).model_dump(by_alias=True))
            else:
                self.stdout.write(f"{entry.total_valency}  {entry.status}  {entry.realization or '-'}")
