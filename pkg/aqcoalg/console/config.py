# -*- coding: utf-8 -*-

"""
aqcoalg command line application config.

Reports go to standard output and diagnostics to the error output. Neither is
styled: a report printed by the tool is the same text that is written with
``--out`` or stored in the report cache.

"""

from cleo.config import ApplicationConfig

from clikit.api.args.format.argument import Argument
from clikit.api.args.format.option import Option
from clikit.api.event import PRE_HANDLE
from clikit.api.event import PRE_RESOLVE
from clikit.api.io import Input
from clikit.api.io import Output
from clikit.api.io.flags import VERBOSE
from clikit.formatter import PlainFormatter
from clikit.handler.help import HelpTextHandler
from clikit.io.input_stream import StandardInputStream
from clikit.io.output_stream import ErrorOutputStream
from clikit.io.output_stream import StandardOutputStream
from clikit.resolver.help_resolver import HelpResolver

# name, short name, description
GLOBAL_FLAGS = [
    ("help", "h", "Display this help message."),
    ("verbose", "v", "Report the stages of long computations."),
    ("version", "V", "Display the application version."),
]


def wants_progress(args):
    return args.has_token("-v") or args.has_token("--verbose")


class Config(ApplicationConfig):
    def configure(self):
        self.set_display_name("aqcoalg")
        self.set_io_factory(self.create_io)
        self.add_event_listener(PRE_RESOLVE, self.resolve_help_command)
        self.add_event_listener(PRE_HANDLE, self.print_version)

        for name, short_name, description in GLOBAL_FLAGS:
            self.add_option(name, short_name, Option.NO_VALUE, description)

        with self.command("help") as c:
            c.default()
            c.set_description("Display the manual of an aqcoalg command")
            c.add_argument(
                "command",
                Argument.OPTIONAL | Argument.MULTI_VALUED,
                "The command name",
            )
            c.set_handler(HelpTextHandler(HelpResolver()))

    def create_io(
        self,
        application,
        args,
        input_stream=None,
        output_stream=None,
        error_stream=None,
    ):
        # one plain formatter for both streams, reports must stay unstyled
        formatter = PlainFormatter(application.config.style_set)
        io = self.io_class(
            Input(input_stream or StandardInputStream()),
            Output(output_stream or StandardOutputStream(), formatter),
            Output(error_stream or ErrorOutputStream(), formatter),
        )
        if wants_progress(args):
            io.set_verbosity(VERBOSE)
        io.set_interactive(False)
        return io
