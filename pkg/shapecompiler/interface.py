#!/usr/bin/env python

"""
Module interface.py - command line interface and the functions behind it.

    shapecompiler fit IMAGE [-o DIR] [--levels 10,30] [--mode 1] ...
    shapecompiler dataset ROOT -o DIR [--split 8:1:1] [--modes 0,1] [--resume] ...
    shapecompiler analyze MANIFEST [--groups 20] [--csv FILE]
    shapecompiler render DOCUMENT [--scale original] [-o FILE]
    shapecompiler size DOCUMENT
    shapecompiler subset MANIFEST --fractions 0.2,0.4 -o DIR

Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.
"""

import argparse
import logging
import os
import sys

from shapecompiler import __version__
from shapecompiler.analyze.entropy_groups import entropy_group_analysis, DEFAULT_GROUPS
from shapecompiler.analyze.level_summary import level_summary
from shapecompiler.compiler import Compiler, RESOLVED_CONFIG_NAME
from shapecompiler.dataset.builder import build_dataset
from shapecompiler.dataset.manifest import load_manifest
from shapecompiler.dataset.subsets import sample_subsets, subset_name, DEFAULT_FRACTIONS
from shapecompiler.definitions.config import (FitConfig, DatasetConfig, BudgetPolicy,
                                              resolve_config, write_config_file)
from shapecompiler.definitions.default_config import DEFAULT_FIT_CONFIG, DEFAULT_DATASET_CONFIG
from shapecompiler.emit.render import render, WORKING, ORIGINAL
from shapecompiler.emit.shape_list import read_document
from shapecompiler.emit.size_report import size_report, format_size_report
from shapecompiler.util.errors import ShapeCompilerError, ConfigError
from shapecompiler.util.util import parse_float_list
from shapecompiler.util.warnings import CompilerWarnings

logger = logging.getLogger(__name__)

# flag dest ---> config key
FIT_FLAGS = ['levels', 'mode', 'alpha', 'seed', 'workers', 'probes', 'climbers',
             'max_age', 'working_size']
DATASET_FLAGS = ['modes', 'split', 'split_seed', 'resume', 'preset']

# render settings are recorded per PNG, not in the directory's resolved_config.txt
RENDER_CONFIG_SUFFIX = '.config.txt'


def get_fit_config(config_file=None, flags=None):
    """FitConfig from defaults, environment, config file and flags."""
    resolved = resolve_config(DEFAULT_FIT_CONFIG, config_file, flags)
    return FitConfig.from_dict(resolved)


def get_dataset_config(input_root, output_root, config_file=None, flags=None, budget_policy=None):
    flags = dict(flags or {})
    flags['input_root'] = input_root
    flags['output_root'] = output_root
    if budget_policy:
        flags['budget'] = True
        flags.update(BudgetPolicy.from_text(budget_policy).to_dict())
    defaults = dict(DEFAULT_DATASET_CONFIG)
    defaults.update(DEFAULT_FIT_CONFIG)
    return DatasetConfig.from_dict(resolve_config(defaults, config_file, flags))


def get_svg(inp, config=None, level=None, file_name=None):
    """Returns the SVG of one level of an image (last level by default)."""
    svg = Compiler(inp, config).get_svg(level)
    if file_name:
        with open(file_name, 'w') as f:
            f.write(svg)
    return svg


def get_shape_list(inp, config=None, level=None, file_name=None):
    """Returns the shape-list JSON of one level of an image."""
    text = Compiler(inp, config).get_shape_list(level)
    if file_name:
        with open(file_name, 'w') as f:
            f.write(text)
    return text


def cmd_fit(args):
    config = get_fit_config(args.config, collect_flags(args, FIT_FLAGS))
    comp = Compiler(args.image, config)
    comp.translate(progress=not args.quiet)
    written = comp.write_outputs(args.output, minify=args.minify, trace=args.trace)
    for checkpoint in comp.checkpoints:
        print('level %i: rmse %.4f, %i svg bytes' % (checkpoint.level, checkpoint.rmse,
                                                    checkpoint.svg_bytes))
    logger.info('%i files written, %s', len(written), comp.warnings.get_summary_str())
    return 0


def cmd_dataset(args):
    flags = collect_flags(args, FIT_FLAGS + DATASET_FLAGS)
    config = get_dataset_config(args.root, args.output, args.config, flags, args.budget_policy)
    os.makedirs(config.output_root, exist_ok=True)
    warnings = CompilerWarnings()
    manifest = build_dataset(config, warnings, progress=not args.quiet)
    write_config_file(os.path.join(config.output_root, RESOLVED_CONFIG_NAME), config.to_dict())
    print('%i entries (%i failed), splits: %s' % (len(manifest), len(manifest.failed_entries),
                                                 ', '.join(manifest.splits)))
    logger.info(warnings.get_summary_str())
    return 0


def cmd_analyze(args):
    manifest = load_manifest(args.manifest)
    report = entropy_group_analysis(manifest, args.sample_size, args.groups, args.seed)
    summary = level_summary(manifest)
    sys.stdout.write(report.to_table())
    sys.stdout.write('\n')
    sys.stdout.write(summary.to_table())
    if args.output:
        os.makedirs(args.output, exist_ok=True)
        with open(os.path.join(args.output, 'entropy_groups.json'), 'w') as f:
            f.write(report.to_json())
        with open(os.path.join(args.output, 'level_summary.json'), 'w') as f:
            f.write(summary.to_json())
        write_run_config(os.path.join(args.output, RESOLVED_CONFIG_NAME),
                         {'manifest': args.manifest, 'groups': args.groups,
                          'sample_size': report.sample_size, 'seed': args.seed, 'csv': args.csv})
    if args.csv:
        with open(args.csv, 'w') as f:
            f.write(report.to_csv())
    return 0


def render_config_path(png_path):
    """a/b.png ---> a/b.config.txt, next to the rendered file."""
    return os.path.splitext(png_path)[0] + RENDER_CONFIG_SUFFIX


def cmd_render(args):
    document = read_document(args.document)
    output = args.output or os.path.splitext(args.document)[0] + '.png'
    render(document, args.scale).save_png(output)
    write_run_config(render_config_path(output),
                     {'document': args.document, 'scale': args.scale, 'output': output})
    logger.info('rendered %s at %s size to %s', args.document, args.scale, output)
    return 0


def cmd_size(args):
    document = read_document(args.document)
    print(format_size_report(size_report(document), args.source_bytes))
    return 0


def cmd_subset(args):
    fractions = parse_float_list(args.fractions) if args.fractions else DEFAULT_FRACTIONS
    manifest = load_manifest(args.manifest)
    os.makedirs(args.output, exist_ok=True)
    for fraction, subset in sample_subsets(manifest, fractions, args.seed).items():
        path = os.path.join(args.output, subset_name(fraction))
        subset.write(path)
        print('%s: %i entries' % (path, len(subset)))
    return 0


def write_run_config(path, values):
    """Records the settings of a command run; unset values are left out."""
    write_config_file(path, dict((key, value) for key, value in values.items() if value is not None))


def collect_flags(args, keys):
    """Explicitly given flags only (argparse defaults are None)."""
    return dict((key, getattr(args, key)) for key in keys if getattr(args, key, None) is not None)


def add_fit_arguments(parser):
    parser.add_argument('--levels', help='ascending checkpoint shape counts, e.g. 10,30,50,100,500,1000')
    parser.add_argument('--mode', help='0 all shape kinds, 1 triangles only')
    parser.add_argument('--alpha', help='shape opacity 1-255')
    parser.add_argument('--seed', help='run seed')
    parser.add_argument('--workers', help='parallel evaluators (env SHAPECOMPILER_WORKERS)')
    parser.add_argument('--probes', help='random candidates per shape')
    parser.add_argument('--climbers', help='candidates refined by hill climbing')
    parser.add_argument('--max-age', dest='max_age', help='failed mutations before a climb stops')
    parser.add_argument('--working-size', dest='working_size', help='max canvas dimension while fitting')


def build_parser():
    parser = argparse.ArgumentParser(prog='shapecompiler',
                                     description='Abstract raster images with primitive shapes.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='store_true', help='debug output')
    parser.add_argument('-q', '--quiet', action='store_true', help='warnings only, no progress bars')
    parser.add_argument('--config', help='key = value configuration file')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    fit_parser = commands.add_parser('fit', help='abstract one image at every level')
    fit_parser.add_argument('image', help='PNG or JPEG image')
    fit_parser.add_argument('-o', '--output', default='.', help='output directory')
    add_fit_arguments(fit_parser)
    fit_parser.add_argument('--trace', action='store_true', help='write trace.jsonl')
    fit_parser.add_argument('--minify', action='store_true', help='also write minified SVGs')
    fit_parser.set_defaults(func=cmd_fit)

    dataset_parser = commands.add_parser('dataset', help='abstract a class structured corpus')
    dataset_parser.add_argument('root', help='corpus root, one directory per class')
    dataset_parser.add_argument('-o', '--output', required=True, help='output root')
    add_fit_arguments(dataset_parser)
    dataset_parser.add_argument('--modes', help='modes to generate, e.g. 0,1')
    dataset_parser.add_argument('--split', help='8:1:1, 9:1, predefined or file=PATH')
    dataset_parser.add_argument('--split-seed', dest='split_seed', help='seed of the split shuffle')
    dataset_parser.add_argument('--resume', action='store_true', default=None,
                                help='continue an interrupted build')
    dataset_parser.add_argument('--budget-policy', dest='budget_policy',
                                help='min,max,low_H,high_H enables the entropy budget')
    dataset_parser.add_argument('--preset', help='miniimagenet, caltech256 or cifar10')
    dataset_parser.set_defaults(func=cmd_dataset)

    analyze_parser = commands.add_parser('analyze', help='entropy groups and level summary')
    analyze_parser.add_argument('manifest', help='manifest.jsonl')
    analyze_parser.add_argument('--groups', type=int, default=DEFAULT_GROUPS, help='number of entropy groups')
    analyze_parser.add_argument('--sample-size', dest='sample_size', type=int, help='entries sampled')
    analyze_parser.add_argument('--seed', type=int, default=0, help='sampling seed')
    analyze_parser.add_argument('--csv', help='write the group table as CSV')
    analyze_parser.add_argument('-o', '--output', help='directory for the JSON reports')
    analyze_parser.set_defaults(func=cmd_analyze)

    render_parser = commands.add_parser('render', help='PNG from a shape-list document')
    render_parser.add_argument('document', help='shape-list JSON')
    render_parser.add_argument('--scale', choices=[WORKING, ORIGINAL], default=ORIGINAL)
    render_parser.add_argument('-o', '--output', help='PNG path')
    render_parser.set_defaults(func=cmd_render)

    size_parser = commands.add_parser('size', help='byte sizes of a shape-list document')
    size_parser.add_argument('document', help='shape-list JSON')
    size_parser.add_argument('--source-bytes', dest='source_bytes', type=int,
                             help='size of the source image for the ratio')
    size_parser.set_defaults(func=cmd_size)

    subset_parser = commands.add_parser('subset', help='nested training subsets of a manifest')
    subset_parser.add_argument('manifest', help='manifest.jsonl')
    subset_parser.add_argument('--fractions', help='e.g. 0.2,0.4,0.6,0.8')
    subset_parser.add_argument('--seed', type=int, default=0)
    subset_parser.add_argument('-o', '--output', required=True, help='output directory')
    subset_parser.set_defaults(func=cmd_subset)
    return parser


def setup_logging(verbose=False, quiet=False):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    """
    Defines CLI for shapecompiler. Returns the exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.quiet)
    try:
        return args.func(args)
    except ConfigError as e:
        sys.stderr.write('shapecompiler: configuration error: %s\n' % e)
        return 2
    except (ShapeCompilerError, OSError) as e:
        sys.stderr.write('shapecompiler: %s\n' % e)
        return 1
    except KeyboardInterrupt:
        sys.stderr.write('shapecompiler: interrupted, finished entries are kept (continue with --resume)\n')
        return 1


if __name__ == '__main__':
    sys.exit(main())
