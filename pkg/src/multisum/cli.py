"""Command-line interface: summarize, eval, tune, compare."""

import argparse
import json
import sys

from . import corpus, encoder as enc, harness, simgraph as sg
from .errors import MultisumError
from .harness import GridSpec
from .summarizer import SummarizerConfig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_METHOD_ALIASES = {"lead3": "lead", "lead": "lead",
                   "textrank": "textrank", "pacsum": "pacsum",
                   "multiround": "multiround"}

_CONFIG_DEFAULTS = {"k": 3, "a": 0.0, "beta1": 1.0, "beta2": 1.0,
                    "alpha1": 0.0, "alpha2": 0.0}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is exit 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_with_usage(message))

    def exit_with_usage(self, message):
        print(f"error: {message}", file=sys.stderr)
        return EXIT_USAGE


def _add_config_flags(p):
    p.add_argument("--config", help="JSON config file mirroring "
                   "SummarizerConfig field names")
    for name in ("a", "beta1", "beta2", "alpha1", "alpha2"):
        p.add_argument(f"--{name}", type=float, default=None,
                       help=f"{name} (default {_CONFIG_DEFAULTS[name]})")
    p.add_argument("--k", type=int, default=None,
                   help="summary sentence count (default 3)")


def _resolve_config(args, method):
    """Precedence: flag > config-file value > built-in default."""
    values = dict(_CONFIG_DEFAULTS)
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            file_cfg = json.load(fh)
        for name in values:
            if name in file_cfg:
                values[name] = file_cfg[name]
    for name in values:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    return SummarizerConfig(method=method, **values)


def build_parser():
    parser = _Parser(prog="multisum",
                     description="Unsupervised extractive summarization via "
                                 "multi-round sentence-graph centrality")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("summarize", help="summarize one document")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="path to a plain-text document")
    src.add_argument("--stdin", action="store_true",
                     help="read the document from standard input")
    p.add_argument("--lang", choices=corpus.LANGS, default=corpus.LATIN)
    p.add_argument("--method", default="multiround",
                   choices=sorted(_METHOD_ALIASES))
    p.add_argument("--encoder", choices=("tfidf", "external"), default="tfidf")
    p.add_argument("--embeddings", help="embedding JSONL (encoder=external)")
    p.add_argument("--trace", help="write per-round selection trace JSON here")
    p.add_argument("--dump-matrix", help="write the similarity matrix as TSV")
    _add_config_flags(p)

    p = sub.add_parser("eval", help="evaluate one method on a JSONL dataset")
    p.add_argument("--dataset", required=True)
    p.add_argument("--method", required=True, choices=sorted(_METHOD_ALIASES))
    p.add_argument("--encoder", choices=("tfidf", "external"), default="tfidf")
    p.add_argument("--embeddings")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the JSON report here (default stdout)")
    p.add_argument("--per-doc", help="also write per-document ROUGE records "
                   "as JSONL here")
    p.add_argument("--skip-bad-lines", action="store_true",
                   help="skip malformed dataset lines instead of failing")
    _add_config_flags(p)

    p = sub.add_parser("tune", help="grid-search hyper-parameters")
    p.add_argument("--dataset", required=True)
    p.add_argument("--grid", required=True, help="JSON GridSpec file")
    p.add_argument("--method", required=True, choices=sorted(_METHOD_ALIASES))
    p.add_argument("--objective", choices=("r1", "r2", "rl"), default=None,
                   help="override the grid file objective")
    p.add_argument("--encoder", choices=("tfidf", "external"), default="tfidf")
    p.add_argument("--embeddings")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write best config + report here")
    p.add_argument("--tune-fraction", type=float, default=None,
                   help="tune on the leading fraction of the dataset "
                        "(for corpora without a validation split)")

    p = sub.add_parser("compare", help="tabulate eval reports side by side")
    p.add_argument("--results", nargs="+", required=True)
    p.add_argument("--out", help="write the TSV table here (default stdout)")
    return parser


def _load_embeddings(args):
    if args.encoder == "external":
        if not args.embeddings:
            raise MultisumError("--encoder external requires --embeddings")
        return enc.load_embedding_file(args.embeddings)
    return None


def _cmd_summarize(args):
    if args.stdin:
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    doc = corpus.document_from_text("stdin" if args.stdin else args.input,
                                    text, args.lang)
    method = _METHOD_ALIASES[args.method]
    config = _resolve_config(args, method)
    embeddings = _load_embeddings(args)
    picked, state = harness.summarize_document(
        doc, config, encoder=args.encoder, embeddings=embeddings,
        return_state=True)
    if args.dump_matrix and doc.n > 1:
        if args.encoder == "external":
            vectors = embeddings[doc.id]
        else:
            model = enc.fit_tfidf([doc])
            vectors = enc.encode_tfidf(model, doc)
        graph = sg.threshold_graph(sg.build_similarity_matrix(vectors),
                                   config.a)
        sg.dump_matrix_tsv(graph, args.dump_matrix)
    if args.trace:
        rounds = []
        if state is not None:
            rounds = [{"round": iv.round, "scores": iv.scores.tolist(),
                       "picked": state.selected[i]}
                      for i, iv in enumerate(state.trace)]
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump({"selection_order": state.selected if state else picked,
                       "rounds": rounds}, fh, indent=2)
            fh.write("\n")
    for i in picked:
        print(doc.sentences[i].raw)
    return EXIT_OK


def _cmd_eval(args):
    split = corpus.load_dataset(
        args.dataset, on_error="skip" if args.skip_bad_lines else "raise")
    method = _METHOD_ALIASES[args.method]
    config = _resolve_config(args, method)
    embeddings = _load_embeddings(args)
    result = harness.evaluate_method(split, config, encoder=args.encoder,
                                     embeddings=embeddings, jobs=args.jobs)
    if args.per_doc:
        from .rouge import score_records
        with open(args.per_doc, "w", encoding="utf-8") as fh:
            for doc_id, scores in result.per_doc:
                for record in score_records(doc_id, scores):
                    fh.write(json.dumps(record, sort_keys=True) + "\n")
    payload = json.dumps(harness.result_to_dict(result), sort_keys=True,
                         indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _cmd_tune(args):
    split = corpus.load_dataset(args.dataset)
    if args.tune_fraction is not None:
        n = max(1, int(len(split.records) * args.tune_fraction))
        split = corpus.DatasetSplit(name=split.name,
                                    records=split.records[:n])
    with open(args.grid, encoding="utf-8") as fh:
        grid = GridSpec.from_json(json.load(fh))
    if args.objective:
        grid.objective = args.objective
    method = _METHOD_ALIASES[args.method]
    embeddings = _load_embeddings(args)

    def log_point(point):
        print(json.dumps(point, sort_keys=True))

    best_config, best_result = harness.grid_search(
        split, grid, method, k=args.k, encoder=args.encoder,
        embeddings=embeddings, jobs=args.jobs, log=log_point)
    payload = json.dumps({
        "best_config": harness.config_to_dict(best_config),
        "result": harness.result_to_dict(best_result),
        "tune_fraction": args.tune_fraction,
        "doc_count": best_result.doc_count,
    }, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _cmd_compare(args):
    results = []
    for path in args.results:
        with open(path, encoding="utf-8") as fh:
            results.append(json.load(fh))
    table, rows = harness.compare_report(results)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(table)
        with open(args.out + ".json", "w", encoding="utf-8") as fh:
            json.dump(rows, fh, sort_keys=True, indent=2)
            fh.write("\n")
    else:
        sys.stdout.write(table)
    return EXIT_OK


_COMMANDS = {"summarize": _cmd_summarize, "eval": _cmd_eval,
             "tune": _cmd_tune, "compare": _cmd_compare}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (MultisumError, OSError, json.JSONDecodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
