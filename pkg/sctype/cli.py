# coding: utf-8
# Copyright (C) 2026, sctype developers.
# Licensed to the Apache Software Foundation (ASF) under one
# or more contributor license agreements.  See the NOTICE file
# distributed with this work for additional information
# regarding copyright ownership.  The ASF licenses this file
# to you under the Apache License, Version 2.0 (the
# "License"); you may not use this file except in compliance
# with the License.  You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied.  See the License for the
# specific language governing permissions and limitations
# under the License.

import sys
import json
import logging
import click
from tqdm import tqdm

from .complex import boundary
from .consts import BOUNDARY_KINDS, DEFAULT_WORKERS, ExitCode
from .decision import (
    Decomposition,
    Verdict,
    computable_type,
    cone_pair_mode,
    decide_link,
    plus_boundary_pair,
    union_check,
)
from .gallery import from_uri, list_gallery, self_check, self_test_uris
from .io import (
    Report,
    complex_document,
    load_pair,
    parse_cone_document,
    read_source,
    serialize,
)
from .link_graph import extract_marked_link
from .utils import SctypeError, set_logger, sha256_digest

_CONTEXT_SETTINGS = {"help_option_names": ['-h', '--help']}

logger = set_logger(log_level='INFO')


def _input_error(e: Exception):
    click.echo('error: %s' % e, err=True)
    sys.exit(ExitCode.INPUT_ERROR)


def _emit(report: Report, as_json: bool):
    click.echo(report.to_json() if as_json else report.to_text())
    sys.exit(report.exit_code)


@click.group(context_settings=_CONTEXT_SETTINGS)
@click.option('-v', '--verbose', is_flag=True, help='输出 DEBUG 级别的日志')
@click.option('--log-file', type=str, default=None, help='日志同时写入此文件')
def cli(verbose, log_file):
    """判断有限单纯复形对 (X, A) 是否具有可计算类型，并给出可验证的证书。

    输入可以是文件路径、`-`（标准输入），或内置样例 `gallery:NAME`，如 `gallery:star(3)`。
    """
    set_logger(log_file, log_level=logging.DEBUG if verbose else logging.INFO)


@cli.command('check')
@click.argument('source')
@click.option('--json', 'as_json', is_flag=True, help='以 JSON 格式输出报告')
@click.option('--parallel', is_flag=True, help='多线程判断各顶点，输出顺序不变')
@click.option(
    '-w',
    '--workers',
    type=int,
    default=DEFAULT_WORKERS,
    help='`--parallel` 时使用的线程数。默认值为 %s' % DEFAULT_WORKERS,
)
@click.option('--progress', is_flag=True, help='显示各顶点的进度条')
def check(source, as_json, parallel, workers, progress):
    """判断 SOURCE 中的复形对。退出码：0 可计算类型，1 非可计算类型，2 不适用，3 输入错误。"""
    try:
        P, digest = load_pair(source)
    except SctypeError as e:
        logger.error('cannot load %s: %s', source, e)
        _emit(Report(Verdict.input_error(str(e), name=source)), as_json)
        return
    verdict = computable_type(P, parallel=parallel, workers=workers, progress=progress)
    _emit(Report(verdict, digest, labels=P.labels), as_json)


@cli.command('check-cone')
@click.argument('source')
@click.option('--json', 'as_json', is_flag=True, help='以 JSON 格式输出报告')
def check_cone(source, as_json):
    """直接判断锥对 cone(L, N)。SOURCE 形如 {"L": [[0,1],[1,2]], "N": [0], "tip_in_m": true}。"""
    try:
        text = read_source(source)
        L, N, tip_in_m = parse_cone_document(text)
        verdict = cone_pair_mode(L, N, tip_in_m)
    except SctypeError as e:
        logger.error('cannot decide the cone over %s: %s', source, e)
        _emit(Report(Verdict.input_error(str(e), name=source)), as_json)
        return
    _emit(Report(verdict, sha256_digest(text)), as_json)


@cli.command('link')
@click.argument('source')
@click.option('-V', '--vertex', type=str, required=True, help='顶点编号或名称')
@click.option('--json', 'as_json', is_flag=True, help='以 JSON 格式输出')
def show_link(source, vertex, as_json):
    """输出顶点的 link 图 L、终点集 N，以及该局部锥对的判断与证书。"""
    try:
        P, _ = load_pair(source)
        v = P.vertex_by_label(vertex)
        M = extract_marked_link(P, v)
    except SctypeError as e:
        _input_error(e)
        return
    local = decide_link(M, label=P.label(v))
    if as_json:
        click.echo(json.dumps(local.to_dict(), sort_keys=True, indent=2, ensure_ascii=False))
        return
    name = P.label
    click.echo('vertex: %s' % name(v))
    click.echo('nodes: %s' % ', '.join(name(n) for n in sorted(M.graph.nodes)))
    click.echo('edges: %s' % ', '.join('%s-%s' % (name(a), name(b)) for a, b in M.edges))
    click.echo('N: {%s}' % ', '.join(name(n) for n in sorted(M.terminals)))
    click.echo('tip in M: %s' % M.tip_in_m)
    click.echo('passes: %s' % local.passes)
    if local.notes:
        click.echo('notes: %s' % ', '.join(local.notes))


@cli.command('boundary')
@click.argument('source')
@click.option(
    '-k',
    '--kind',
    type=click.Choice(BOUNDARY_KINDS),
    default='one',
    help='边界类型：one 为恰好属于一个高一维单纯形的面，plus 为至少一个，odd 为奇数个。默认值为 one',
)
def show_boundary(source, kind):
    """以复形对文档（A 为空）输出 X 的边界 ∂₁、∂₊ 或 ∂_odd。"""
    try:
        P, _ = load_pair(source)
    except SctypeError as e:
        _input_error(e)
        return
    B = boundary(P.X, kind)
    labels = {v: P.label(v) for v in B.vertices} if P.labels else None
    click.echo(complex_document(B, name='%s-boundary-%s' % (P.name, kind), labels=labels), nl=False)


@cli.command('subdivide')
@click.argument('source')
@click.option('-i', '--iterations', type=int, default=1, help='重心细分的次数。默认值为 1')
@click.option('-o', '--output', type=click.Path(dir_okay=False), default=None, help='输出文件；默认输出到标准输出')
def subdivide(source, iterations, output):
    """输出复形对的重心细分。"""
    try:
        P, _ = load_pair(source)
        sd = P.subdivide(iterations)
    except (SctypeError, ValueError) as e:
        _input_error(e)
        return
    text = serialize(sd)
    if output:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info('%d-fold subdivision of %s written to %s', iterations, P.name, output)
    else:
        click.echo(text, nl=False)


@cli.command('union-check')
@click.argument('source')
@click.argument('pieces', nargs=-1)
@click.option(
    '--plus-boundary',
    is_flag=True,
    help='忽略 SOURCE 中的 A，检查 (X, ∂₊X) 及其按极大单纯形的分解',
)
@click.option('--json', 'as_json', is_flag=True, help='以 JSON 格式输出报告')
def check_union(source, pieces, plus_boundary, as_json):
    """充分条件：若每个分片 (X_i, A_i) 都具有可计算类型，则 (X, A) 也具有。"""
    try:
        P, digest = load_pair(source)
        if plus_boundary:
            P, D = plus_boundary_pair(P.X)
        else:
            if not pieces:
                raise SctypeError('give piece documents, or --plus-boundary')
            D = Decomposition(load_pair(p)[0] for p in pieces)
        verdict = union_check(P, D)
    except SctypeError as e:
        logger.error('union check of %s failed: %s', source, e)
        _emit(Report(Verdict.input_error(str(e), name=source)), as_json)
        return
    _emit(Report(verdict, digest, labels=P.labels), as_json)


@cli.command('gallery')
@click.argument('name', required=False, default='list')
@click.option('--emit', is_flag=True, help='输出该样例的复形对文档')
def gallery(name, emit):
    """列出内置样例，或显示 / 导出其中一个（如 `star(3)`）。"""
    if name == 'list':
        for item in list_gallery():
            params = '(%s)' % ', '.join(item['params']) if item['params'] else ''
            click.echo('%s%s\n    %s' % (item['name'], params, item['provenance']))
        return
    try:
        item = from_uri(name)
    except SctypeError as e:
        _input_error(e)
        return
    if emit:
        click.echo(serialize(item.pair), nl=False)
        return
    click.echo('name: %s' % item.name)
    click.echo('provenance: %s' % item.provenance)
    click.echo('f-vector: %s' % item.pair.X.f_vector)
    for fact, value in sorted(item.expected.items()):
        click.echo('expected %s: %s' % (fact, value))


@cli.command('self-test')
@click.option('--json', 'as_json', is_flag=True, help='以 JSON 格式输出各样例的检查结果')
def self_test(as_json):
    """对所有内置样例运行结构自检；全部通过时退出码为 0。"""
    reports = [self_check(from_uri(uri)) for uri in tqdm(self_test_uris(), desc='gallery')]
    if as_json:
        click.echo(json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2))
    else:
        for r in reports:
            click.echo('%-24s %s' % (r.name, 'ok' if r.ok else 'FAILED %s' % r.violations))
    failed = [r.name for r in reports if not r.ok]
    if failed:
        logger.error('self-test failed for %s', failed)
        sys.exit(1)
    logger.info('self-test passed for %d items', len(reports))


if __name__ == '__main__':
    cli()
