#!/usr/bin/env python
# encoding: utf-8
"""
CausalKG: causal knowledge graphs from causal Bayesian networks.

Usage:
  causalkg validate <model> [options]
  causalkg fit <skeleton> <data> [--alpha=<a>] [-o <out>] [options]
  causalkg sample <model> <n> [-o <out>] [options]
  causalkg effects <model> --treatment=<t> --outcome=<o> [--mediator=<m>] [--t0=<s> --t1=<s>] [options]
  causalkg build <model> --roles=<roles> [-o <out>] [options]
  causalkg query <model> <query> [--kg=<kg>] [--explain] [options]
  causalkg shell <model> [--kg=<kg>] [--explain] [options]
  causalkg example [<name>] [-o <out>] [options]
  causalkg (-h | --help)
  causalkg --version

Options:
  -o <out>, --output=<out>  Output file (or, for “example”, directory).
  --alpha=<a>               Dirichlet pseudo-count for fitting [default: 1.0].
  --format=<format>         Output format, “text” or “json” [default: text].
  --seed=<n>                Random seed for sampling [default: 42].
  --engine=<engine>         Inference engine, “ve” or “enumerate” [default: ve].
  --debug                   Log diagnostic detail to stderr.
  -h, --help                Show this message.
  --version                 Show the version.

Exit status is 0 on success, 2 for a domain or usage error, and 3 when a
file cannot be read or is ill-formed. Set CAUSALKG_NO_COLOR to turn off
terminal styling.
"""
from __future__ import print_function

import json
import logging
import sys

from docopt import docopt, DocoptExit

from causalkg import __version__
from causalkg.constants import DEBUG
from causalkg.errors import CausalKGError, FormatError, DecompositionViolation
from causalkg.causal.mediation import EffectSpec, decompose
from causalkg.fixtures import write_example
from causalkg.graph.knowledge import build_kg
from causalkg.graph.turtlestar import serialize, dump, load
from causalkg.network.inference import Engine
from causalkg.network.modelfile import (read_model, write_model, network_to_document,
                                        read_dataset, write_dataset)
from causalkg.network.sampling import sample, fit_cpts
from causalkg.network.validation import validate
from causalkg.ontology.roles import read_roles, validate_roles
from causalkg.query.evaluation import fixed
from causalkg.query.explanation import explain
from causalkg.query.parser import parse_query
from causalkg.utils.ansi import Style, paint
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger('causalkg')

COMMANDS = ('validate', 'fit', 'sample', 'effects',
            'build', 'query', 'shell', 'example')

FORMATS = ('text', 'json')

PROMPT = "causalkg> "
QUIT = ":quit"

class UsageError(CausalKGError, ValueError):
    """ A malformed option value """
    pass

class Console(object):

    """ Where a command writes: results to `out`, diagnostics to `err` """
    __slots__ = ('out', 'err')

    def __init__(self, out=None, err=None):
        self.out = out or sys.stdout
        self.err = err or sys.stderr

    def print(self, text="", *styles):
        print(paint(text, *styles, stream=self.out), file=self.out)

    def write(self, text):
        self.out.write(text)

    def json(self, document):
        self.write(json.dumps(document, indent=2, ensure_ascii=False) + "\n")

    def error(self, text):
        print(paint(f"causalkg: {text}", Style.RED, stream=self.err), file=self.err)

def configure_logging(debug, stream):
    """ Route the causalkg loggers to `stream`, replacing any handler an
        earlier call installed
    """
    for handler in list(logger.handlers):
        if getattr(handler, 'causalkg', False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.causalkg = True
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if debug else logging.WARNING)

class Options(object):

    """ Checked values of the docopt argument dictionary """
    __slots__ = ('arguments', 'format', 'seed', 'engine', 'alpha', 'output')

    def __init__(self, arguments):
        self.arguments = arguments
        self.format = arguments['--format']
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        self.seed = self.integer('--seed', arguments['--seed'])
        self.engine = Engine.of(arguments['--engine'])
        self.alpha = self.number('--alpha', arguments['--alpha'])
        self.output = arguments['--output']

    @staticmethod
    def integer(name, value):
        try:
            return int(value)
        except (TypeError, ValueError):
            raise UsageError(f"{name} must be an integer, not {value!r}")

    @staticmethod
    def number(name, value):
        try:
            return float(value)
        except (TypeError, ValueError):
            raise UsageError(f"{name} must be a number, not {value!r}")

    def __getitem__(self, key):
        return self.arguments[key]

    @property
    def json(self):
        return self.format == 'json'

def cmd_validate(options, console):
    model = read_model(options['<model>'])
    report = validate(model)
    if options.json:
        console.json({ 'ok'         : report.ok,
                       'findings'   : [{ 'kind'     : finding.kind,
                                         'variable' : finding.variable,
                                         'message'  : finding.message } \
                                         for finding in report] })
    elif report.ok:
        console.print(f"ok: {len(model)} variables, {len(model.edges)} edges", Style.GREEN)
    for finding in report:
        console.error(f"{finding.kind}: {finding}")
    return 0 if report.ok else 2

def cmd_fit(options, console):
    skeleton = read_model(options['<skeleton>'])
    data = read_dataset(options['<data>'])
    model = fit_cpts(skeleton, data, alpha=options.alpha)
    if options.output:
        write_model(model, options.output)
    else:
        console.json(network_to_document(model))
    return 0

def cmd_sample(options, console):
    model = read_model(options['<model>'])
    n = Options.integer('<n>', options['<n>'])
    dataset = sample(model, n, options.seed)
    if options.output:
        write_dataset(dataset, options.output)
    else:
        console.write(dataset.frame.to_csv(index=False, lineterminator="\n"))
    return 0

def report_lines(report):
    yield report.spec.describe()
    yield f"TCE = {fixed(report.tce)}"
    if report.mediated:
        yield f"NDE = {fixed(report.nde)}"
        yield f"NIE = {fixed(report.nie)}"
    for warning in report.warnings:
        yield f"warning: {warning}"

def cmd_effects(options, console):
    model = read_model(options['<model>'])
    spec = EffectSpec(options['--treatment'], options['--outcome'],
                      options['--mediator'], options['--t0'], options['--t1'])
    report = decompose(model, spec, engine=options.engine)
    if options.json:
        console.json(report.to_dict())
    else:
        for line in report_lines(report):
            console.print(line)
    return 0

def cmd_build(options, console):
    model = read_model(options['<model>'])
    model.require_valid()
    mapping = read_roles(options['--roles'])
    findings = validate_roles(model, mapping)
    if not findings.ok:
        for finding in findings:
            console.error(f"{finding.kind}: {finding}")
        return 2
    reports = [decompose(model, EffectSpec(pattern.treatment, pattern.outcome,
                                           pattern.mediator), engine=options.engine) \
               for pattern in mapping.patterns()]
    kg = build_kg(model, mapping, reports, engine=options.engine)
    if options.output:
        dump(kg, options.output)
    else:
        console.write(serialize(kg))
    return 0

def answer(text, model, kg, options, console, explaining=False):
    ast = parse_query(text)
    result = ast.evaluate(model, kg=kg, engine=options.engine)
    if options.json:
        document = result.to_dict()
        if explaining:
            document['explanation'] = explain(result, kg, ast)
        console.json(document)
        return
    console.print(result.to_text(), Style.BOLD)
    if explaining:
        console.write(explain(result, kg, ast))

def session(options):
    model = read_model(options['<model>'])
    model.require_valid()
    kg = load(options['--kg']) if options['--kg'] else None
    return model, kg

def cmd_query(options, console):
    model, kg = session(options)
    answer(options['<query>'], model, kg, options, console,
           explaining=options['--explain'])
    return 0

def cmd_shell(options, console, stdin=None):
    """ Answer one query per input line until “:quit” or end of input """
    stdin = stdin or sys.stdin
    model, kg = session(options)
    interactive = hasattr(stdin, 'isatty') and stdin.isatty()
    while True:
        if interactive:
            console.write(PROMPT)
            console.out.flush()
        line = stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if line == QUIT:
            break
        try:
            answer(line, model, kg, options, console,
                   explaining=options['--explain'])
        except CausalKGError as exc:
            console.print(f"error: {exc}", Style.RED)
    return 0

def cmd_example(options, console):
    name = options['<name>'] or 'collision'
    for path in write_example(name, options.output or '.'):
        console.print(path)
    return 0

HANDLERS = { 'validate'     : cmd_validate,
             'fit'          : cmd_fit,
             'sample'       : cmd_sample,
             'effects'      : cmd_effects,
             'build'        : cmd_build,
             'query'        : cmd_query,
             'shell'        : cmd_shell,
             'example'      : cmd_example }

@export
def main(argv=None, out=None, err=None):
    """ Run the command line `argv` and return the exit status """
    console = Console(out, err)
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        arguments = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit as exc:
        console.error("usage error")
        print(str(exc), file=console.err)
        return 2
    except SystemExit:
        # --help and --version print, then exit:
        return 0
    configure_logging(arguments['--debug'] or DEBUG, console.err)
    command = next(name for name in COMMANDS if arguments[name])
    logger.debug("command: %s", command)
    try:
        return HANDLERS[command](Options(arguments), console)
    except FormatError as exc:
        console.error(str(exc))
        return 3
    except DecompositionViolation as exc:
        console.error(f"internal error: {exc}")
        return 1
    except (CausalKGError, ValueError) as exc:
        console.error(str(exc))
        return 2

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()

if __name__ == '__main__':
    sys.exit(main())
