"""
Houses controllers for the command-line subcommands.

Each controller takes the validated :class:`.RunConfig` of an invocation
plus its subcommand-specific arguments, and returns a domain result that the
:mod:`echoloc.serialize` module can render.
"""
