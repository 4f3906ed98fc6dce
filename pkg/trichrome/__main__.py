#!/usr/bin/env python3

import concurrent.futures
import json
import os
import sys
import traceback

import trichrome.coloring
import trichrome.constructions
import trichrome.enumeration
import trichrome.graph6
import trichrome.test
import trichrome.test.cli
import trichrome.test.coloring
import trichrome.test.constructions
import trichrome.test.enumeration
import trichrome.test.graph
import trichrome.test.structure
import trichrome.verify
from trichrome.constructions import Triple
from trichrome.graph import CapacityError, DomainError

import click
import jschon
import tqdm

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INCOMPLETE = 3

class Group(click.Group):
    # click exits 2 on usage errors; this tool reserves 2 for bad data
    def main(self, args=None, prog_name=None, **kwargs):
        kwargs.pop('standalone_mode', None)
        try:
            rv = super().main(args=args, prog_name=prog_name, standalone_mode=False, **kwargs)
        except click.exceptions.Abort:
            click.echo('Aborted!', err=True)
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else 0)

def emit(obj):
    click.echo(json.dumps(obj, sort_keys=True))

def threads_option(f):
    return click.option('-j', '--threads', type=click.IntRange(min=1), default=os.cpu_count(), show_default=True)(f)

def triple_options(f):
    f = click.option('--h', 'h', type=int, required=True)(f)
    f = click.option('--g', 'g', type=int, required=True)(f)
    f = click.option('--f', 'f', type=int, required=True)(f)
    return f

def make_triple(f, g, h):
    try:
        return Triple(f, g, h)
    except ValueError as e:
        raise click.UsageError(str(e))

def label_map(graph):
    return {'labels': [graph.label(v) for v in range(graph.n)]}

@click.group(cls=Group)
def cli():
    pass

def read_lines(graphs, input):
    if graphs and input:
        raise click.UsageError('give graphs as arguments or with --input, not both')
    if graphs:
        return list(graphs)
    source = input if input else click.get_text_stream('stdin')
    return [line.rstrip('\r\n') for line in source if line.strip()]

def analyze_line(line):
    try:
        g = trichrome.graph6.parse_graph6(line)
        if g.n == 0:
            raise ValueError('graph has no vertices')
        return trichrome.coloring.analyze(g).as_json()
    except ValueError as e:
        # parse, capacity and empty-graph errors all derive from ValueError
        return {'error': str(e)}

def pretty_row(report):
    if 'error' in report:
        return 'error: {}'.format(report['error'])
    return '{n:>3} {m:>4} {omega:>5} {chi:>4} {gamma:>5} {psi:>4}'.format(**report)

@cli.command()
@click.option('-i', '--input', type=click.File('r'))
@click.option('--pretty', is_flag=True)
@threads_option
@click.argument('graphs', nargs=-1)
def analyze(input, pretty, threads, graphs):
    lines = read_lines(graphs, input)
    failed = False
    if pretty:
        click.echo('  n    m omega  chi gamma  psi')
    with trichrome.enumeration.parallel_map(threads) as mapper:
        for line, report in zip(lines, mapper(analyze_line, lines)):
            if 'error' in report:
                failed = True
                print('{}: {}'.format(line, report['error']), file=sys.stderr)
            if pretty:
                click.echo(pretty_row(report))
            else:
                emit(report)
    if failed:
        sys.exit(EXIT_DATA)

@cli.command()
@click.argument('family', type=click.Choice(sorted(trichrome.constructions.FAMILIES.keys()), case_sensitive=False))
@click.option('--k', 'k', type=int)
@click.option('--g', 'g', type=int)
@click.option('--h', 'h', type=int)
@click.option('--t', 't', type=int)
@click.option('--ell', 'ell', type=int)
@click.option('--f', 'f', type=int)
@click.option('--labels', is_flag=True)
def construct(family, k, g, h, t, ell, f, labels):
    try:
        graph = trichrome.constructions.construct(family.lower(), k=k, g=g, h=h, t=t, ell=ell, f=f)
    except ValueError as e:
        raise click.UsageError(str(e))
    click.echo(trichrome.graph6.write_graph6(graph))
    if labels:
        emit(label_map(graph))

@cli.command('min-order')
@triple_options
def min_order(f, g, h):
    t = make_triple(f, g, h)
    emit({
        'triple': list(t.as_tuple()),
        'realizable': t.realizable,
        'min_order': trichrome.constructions.min_order(t) if t.realizable else None,
    })

@cli.command()
@triple_options
@click.option('--labels', is_flag=True)
@click.option('--analyze', 'with_report', is_flag=True)
def realize(f, g, h, labels, with_report):
    t = make_triple(f, g, h)
    try:
        graph = trichrome.constructions.realize(t)
    except DomainError as e:
        emit({'error': str(e)})
        sys.exit(EXIT_DATA)
    click.echo(trichrome.graph6.write_graph6(graph))
    if labels:
        emit(label_map(graph))
    if with_report:
        emit(trichrome.coloring.analyze(graph).as_json())

@cli.command('enumerate')
@click.option('-n', '--order', 'n', type=click.IntRange(min=1), required=False)
@click.option('--count', is_flag=True)
@click.option('--hoptimal', 'h', type=int)
@click.option('-o', '--output', type=click.File('w'), default='-')
@click.option('--extended', is_flag=True)
@threads_option
def enumerate_(n, count, h, output, extended, threads):
    if (n is None) == (h is None):
        raise click.UsageError('give exactly one of --order or --hoptimal')

    if h is not None:
        if h == 6 and not extended:
            raise click.UsageError('--hoptimal 6 needs --extended')
        try:
            found = trichrome.enumeration.h_optimal_graphs(h, threads, progress=True)
        except CapacityError as e:
            emit({'error': str(e)})
            sys.exit(EXIT_INCOMPLETE)
        for graph in found:
            report = trichrome.coloring.analyze(graph).as_json()
            report['graph6'] = trichrome.graph6.write_graph6(graph)
            output.write(json.dumps(report, sort_keys=True) + '\n')
        print('{} graphs are {}-optimal.'.format(len(found), h), file=sys.stderr)
        return

    if n >= 9 and not extended:
        raise click.UsageError('--order {} needs --extended'.format(n))
    try:
        if count:
            output.write(json.dumps(trichrome.enumeration.count_connected(n, threads, progress=True), sort_keys=True) + '\n')
            return
        for graph in trichrome.enumeration.connected_graphs(n, threads, progress=True):
            output.write(trichrome.graph6.write_graph6(graph) + '\n')
    except CapacityError as e:
        emit({'error': str(e)})
        sys.exit(EXIT_INCOMPLETE)

@cli.command()
@click.argument('scope', type=click.Choice(['minorder', 'hoptimal', 'paper-suite']))
@click.option('--f', 'f', type=int)
@click.option('--g', 'g', type=int)
@click.option('--h', 'h', type=int)
@click.option('--extended', is_flag=True)
@threads_option
def verify(scope, f, g, h, extended, threads):
    if scope == 'minorder':
        if None in (f, g, h):
            raise click.UsageError('minorder needs --f, --g and --h')
        t = make_triple(f, g, h)
        if not t.realizable:
            raise click.UsageError('triple {} is not realizable'.format(t))
        verdicts = [trichrome.verify.minorder(t, threads, progress=True)]
    elif scope == 'hoptimal':
        if h is None:
            raise click.UsageError('hoptimal needs --h')
        verdicts = trichrome.verify.hoptimal(h, threads, progress=True, extended=extended)
    else:
        verdicts = trichrome.verify.acceptance_suite(threads, progress=True, extended=extended)

    fails = []
    incomplete = []
    for verdict in verdicts:
        emit(verdict.as_json())
        if verdict.incomplete:
            incomplete.append(verdict.claim)
        elif verdict.skipped is None and not verdict.passed:
            fails.append(verdict.claim)

    for claim in fails:
        print(' - {} failed'.format(claim), file=sys.stderr)
    for claim in incomplete:
        print(' - {} skipped'.format(claim), file=sys.stderr)
    if fails:
        sys.exit(EXIT_USAGE)
    if incomplete:
        sys.exit(EXIT_INCOMPLETE)

VERTEX_LIST = {
    'type': 'array',
    'items': {'type': 'integer', 'minimum': 0},
    'uniqueItems': True,
}

CERTIFICATE_SCHEMA = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['h_set', 's_set', 'k'],
    'properties': {
        'h_set': VERTEX_LIST,
        's_set': VERTEX_LIST,
        'k': {'type': 'integer', 'minimum': 0},
    },
}

_certificate_schema = None

def certificate_schema():
    global _certificate_schema
    if _certificate_schema is None:
        jschon.create_catalog('2020-12')
        _certificate_schema = jschon.JSONSchema(CERTIFICATE_SCHEMA)
    return _certificate_schema

def load_certificate(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise click.BadParameter('not JSON: {}'.format(e), param_hint='--cert')
    result = certificate_schema().evaluate(jschon.JSON(data))
    if not result.valid:
        raise click.BadParameter('expected {"h_set": [...], "s_set": [...], "k": ...}', param_hint='--cert')
    return trichrome.coloring.GrundyCertificate.from_json(data)

@cli.command()
@click.argument('graph')
@click.option('-c', '--cert', 'cert_text', required=True, help='certificate JSON, or @FILE')
def certify(graph, cert_text):
    if cert_text.startswith('@'):
        with open(cert_text[1:]) as f:
            cert_text = f.read()
    cert = load_certificate(cert_text)

    try:
        g = trichrome.graph6.parse_graph6(graph)
        passed, reason = trichrome.coloring.check_certificate(g, cert)
    except ValueError as e:
        emit({'error': str(e)})
        sys.exit(EXIT_DATA)

    if passed:
        emit({'pass': True, 'grundy_at_least': cert.k + 1})
        return
    emit({'pass': False, 'reason': reason})
    sys.exit(EXIT_DATA)

def run_check(check):
    check.run()

@cli.command()
@click.option('-n', '--name')
@click.option('--extended', is_flag=True)
@threads_option
def test(name, extended, threads):
    tests = list(trichrome.test.Check.iter_tests(extended=extended, filter=lambda t: name is None or t.name == name))

    total = 0
    fails = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as executor:
        with tqdm.tqdm(total=len(tests), unit='t') as pbar:
            results = [executor.submit(run_check, t) for t in tests]
            for t, result in zip(tests, results):
                pbar.desc = t.name
                pbar.update(0)

                try:
                    result.result()
                except Exception:
                    fails.append(t.name)
                    print()
                    print()
                    print('!!! ', t.name)
                    traceback.print_exc()
                    print()

                total += 1
                pbar.update(1)

            pbar.desc = ''
            pbar.update(0)

    print()
    print('{} tests, {} failures.'.format(total, len(fails)))
    for test_name in fails:
        print(' - {} failed'.format(test_name))

    if fails:
        sys.exit(1)

if __name__ == '__main__':
    cli(auto_envvar_prefix='TRICHROME')
