# -*- coding: utf-8 -*-

from cleo import Command

from aqcoalg.exceptions import Error
from aqcoalg.wrappers import validate_file


class ValidateCommand(Command):
    """
    Check the axioms of a coalgebra or comodule file

    validate
        { path : The path to the coalgebra or comodule file }
        { --j|json : Print the report as a JSON object. }
    """

    help = """\
The <info>validate</info> command parses a coalgebra or comodule file and
checks coassociativity, counitality, cocommutativity and, over F2, the
unstable Steenrod axioms. It exits with 0 when the input is valid, 2 on a
parse error and 3 when an axiom fails.
    """

    def handle(self):
        try:
            text, report = validate_file(self.argument("path"))
        except Error as e:
            self.line_error("%s: %s" % (type(e).__name__, e))
            return e.exit_code
        if self.option("json"):
            self.line(text.rstrip("\n"))
        elif report.ok:
            self.line("%s is valid." % report.subject)
        else:
            self.line("%s is invalid:" % report.subject)
            for violation in report.violations:
                self.line("  %s" % violation)
        return 0 if report.ok else 3
