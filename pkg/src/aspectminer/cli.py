"""Command-line interface.

Subcommands mirror the pipeline stages: ``tag`` emits pretagged lines,
``mine`` reports frequent tag sequences, ``extract`` lists aspect/opinion
pairs, ``summarize`` renders the pros/cons report, and ``evaluate``
scores extraction against gold annotations.

Exit codes: 0 success, 2 missing input or resource file (path named),
3 malformed content, 1 any other error.  A JSON config file can seed
any flag; explicit command-line flags win.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path

from .corpus import Corpus, load_corpus
from .errors import AspectMinerError, ParseError
from .evaluation import (
    compare_to_baseline,
    load_report,
    make_report,
    render_report,
)
from .patterns import mine_frequent_tag_sets
from .pipeline import (
    Resources,
    evaluate_corpus,
    extract_corpus,
    load_pretagged_file,
    load_resources,
    summarize_corpus,
    tag_corpus,
)
from .summary import render
from .tagger import TaggedSentence, render_pretagged

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISSING_FILE = 2
EXIT_PARSE_ERROR = 3

_PATH_FIELDS = (
    "patterns",
    "pos_lex",
    "neg_lex",
    "aspects",
    "synonyms",
    "verbs",
    "tag_lexicon",
    "baseline",
)


@dataclass
class RunConfig:
    """Everything one subcommand invocation needs."""

    corpus: list[str] = field(default_factory=list)
    pretagged: list[str] = field(default_factory=list)
    patterns: str | None = None
    pos_lex: str | None = None
    neg_lex: str | None = None
    aspects: str | None = None
    synonyms: str | None = None
    verbs: str | None = None
    tag_lexicon: str | None = None
    baseline: str | None = None
    product: str | None = None
    top_k: int = 3
    min_support: int = 2
    max_len: int = 6
    format: str = "text"
    out: str = "stdout"
    use_pretagged: bool = False
    enable_fallback_search: bool = True
    enable_conjunction_expand: bool = True

    def validate(self) -> None:
        if self.top_k < 1:
            raise ValueError("top-k must be >= 1")
        if self.min_support < 1:
            raise ValueError("min-support must be >= 1")
        for path in list(self.corpus) + list(self.pretagged):
            if not Path(path).is_file():
                raise FileNotFoundError(path)
        for name in _PATH_FIELDS:
            value = getattr(self, name)
            if value is not None and not Path(value).is_file():
                raise FileNotFoundError(value)


def _load_config_file(path: str) -> dict:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FileNotFoundError(path) from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", path=path) from exc
    if not isinstance(data, dict):
        raise ParseError("config must be a JSON object", path=path)
    known = {f.name for f in fields(RunConfig)}
    unknown = set(data) - known
    if unknown:
        raise ParseError(
            f"unknown config key(s): {', '.join(sorted(unknown))}", path=path
        )
    for key in ("corpus", "pretagged"):
        if key in data and isinstance(data[key], str):
            data[key] = [data[key]]
    return data


def build_config(args: argparse.Namespace) -> RunConfig:
    """Merge config-file values with explicit flags (flags win)."""
    values: dict = {}
    if args.config:
        values.update(_load_config_file(args.config))
    for f in fields(RunConfig):
        flag_value = getattr(args, f.name, None)
        if flag_value is not None:
            values[f.name] = flag_value
    config = RunConfig(**values)
    if config.pretagged:
        config.use_pretagged = True
    return config


def _resources(config: RunConfig) -> Resources:
    return load_resources(
        pos_lex=config.pos_lex,
        neg_lex=config.neg_lex,
        aspects=config.aspects,
        synonyms=config.synonyms,
        verbs=config.verbs,
        patterns=config.patterns,
        tag_lexicon=config.tag_lexicon,
    )


def _load_corpora(config: RunConfig) -> list[Corpus]:
    return [load_corpus(path) for path in config.corpus]


def _tagged_sentences(config: RunConfig, res: Resources) -> list[TaggedSentence]:
    """Tagged input for non-evaluate commands, from raw or pretagged files."""
    if config.use_pretagged:
        tagged: list[TaggedSentence] = []
        for path in config.pretagged:
            batch = load_pretagged_file(path)
            offset = len(tagged)
            tagged.extend(
                TaggedSentence(tokens=s.tokens, source=s.source, position=offset + i)
                for i, s in enumerate(batch)
            )
        return tagged
    tagged = []
    tagger = res.tagger()
    for corpus in _load_corpora(config):
        offset = len(tagged)
        for s in tag_corpus(corpus, tagger):
            tagged.append(
                TaggedSentence(tokens=s.tokens, source=s.source, position=offset + s.position)
            )
    return tagged


def _require_input(config: RunConfig) -> None:
    if not config.corpus and not config.pretagged:
        raise ValueError("no input: pass --corpus or --pretagged")


def _product_name(config: RunConfig) -> str:
    if config.product:
        return config.product
    if config.corpus:
        return Path(config.corpus[0]).stem
    if config.pretagged:
        return Path(config.pretagged[0]).stem
    return "reviews"


def _write_output(text: str, out: str) -> None:
    if out == "stdout":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_tag(config: RunConfig) -> str:
    if not config.corpus:
        raise ValueError("tag needs --corpus")
    res = _resources(config)
    tagger = res.tagger()
    lines = []
    for corpus in _load_corpora(config):
        for sentence in tag_corpus(corpus, tagger):
            lines.append(render_pretagged(sentence))
    return "".join(line + "\n" for line in lines)


def _cmd_mine(config: RunConfig) -> str:
    _require_input(config)
    res = _resources(config)
    tagged = _tagged_sentences(config, res)
    mined = mine_frequent_tag_sets(tagged, config.min_support, config.max_len)
    if config.format == "machine":
        lines = ["# tags\tsupport\tratio"]
        lines.extend(
            f"{' '.join(m.tags)}\t{m.support}\t{m.support_ratio:.6f}" for m in mined
        )
    else:
        lines = [
            f"{' '.join(m.tags)}  support={m.support} ({m.support_ratio:.1%})"
            for m in mined
        ] or ["no frequent tag sequences"]
    return "\n".join(lines) + "\n"


def _cmd_extract(config: RunConfig) -> str:
    _require_input(config)
    res = _resources(config)
    tagged = _tagged_sentences(config, res)
    pairs = extract_corpus(
        tagged,
        res,
        fallback=config.enable_fallback_search,
        conjunction=config.enable_conjunction_expand,
    )
    if config.format == "machine":
        lines = ["# sentence_id\taspect\topinion\tpolarity\tpattern"]
        lines.extend(
            f"{p.sentence.position}\t{p.aspect_surface}\t{p.opinion_surface}"
            f"\t{p.orientation}\t{p.pattern_name}"
            for p in pairs
        )
        return "\n".join(lines) + "\n"
    if not pairs:
        return "no pairs extracted\n"
    lines = [
        f"[{p.sentence.position}] {p.aspect_surface}: {p.opinion_surface}"
        f" ({p.orientation}, {p.pattern_name})"
        for p in pairs
    ]
    return "\n".join(lines) + "\n"


def _cmd_summarize(config: RunConfig) -> str:
    _require_input(config)
    res = _resources(config)
    tagged = _tagged_sentences(config, res)
    summary, _, _ = summarize_corpus(
        tagged,
        res,
        top_k=config.top_k,
        product_name=_product_name(config),
        fallback=config.enable_fallback_search,
        conjunction=config.enable_conjunction_expand,
    )
    return render(summary, config.format)


def _cmd_evaluate(config: RunConfig) -> str:
    if not config.corpus:
        raise ValueError("evaluate needs --corpus with gold annotations")
    if config.pretagged and len(config.pretagged) != len(config.corpus):
        raise ValueError(
            f"{len(config.pretagged)} pretagged file(s) for "
            f"{len(config.corpus)} corpus file(s)"
        )
    res = _resources(config)
    rows = []
    breakdowns = []
    for i, path in enumerate(config.corpus):
        corpus = load_corpus(path)
        if config.pretagged:
            tagged = load_pretagged_file(config.pretagged[i], corpus)
        else:
            tagged = tag_corpus(corpus, res.tagger())
        scores, breakdown = evaluate_corpus(
            corpus,
            tagged,
            res,
            fallback=config.enable_fallback_search,
            conjunction=config.enable_conjunction_expand,
        )
        rows.append(scores)
        breakdowns.append(breakdown)
    report = make_report(rows)
    text = render_report(report, config.format)
    if config.format == "text":
        exact_lines = [
            f"{row.product}: exact-match aspect p={b.aspect_p_exact:.3f} "
            f"r={b.aspect_r_exact:.3f}, opinion p={b.opinion_p_exact:.3f} "
            f"r={b.opinion_r_exact:.3f}"
            for row, b in zip(rows, breakdowns)
        ]
        text += "\n".join(exact_lines) + "\n"
    if config.baseline:
        baseline = load_report(config.baseline)
        comparison = compare_to_baseline(report, baseline)
        text += comparison.table
    return text


_COMMANDS = {
    "tag": _cmd_tag,
    "mine": _cmd_mine,
    "extract": _cmd_extract,
    "summarize": _cmd_summarize,
    "evaluate": _cmd_evaluate,
}


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON config file seeding any flag")
    parser.add_argument(
        "--corpus", action="append", metavar="PATH", help="review corpus file (repeatable)"
    )
    parser.add_argument(
        "--pretagged",
        action="append",
        metavar="PATH",
        help="pretagged word/TAG file (repeatable)",
    )
    parser.add_argument("--patterns", help="tag pattern file")
    parser.add_argument("--pos-lex", dest="pos_lex", help="positive opinion word list")
    parser.add_argument("--neg-lex", dest="neg_lex", help="negative opinion word list")
    parser.add_argument("--aspects", help="aspect dictionary file")
    parser.add_argument("--synonyms", help="aspect synonym file")
    parser.add_argument("--verbs", help="verb category file")
    parser.add_argument("--tag-lexicon", dest="tag_lexicon", help="word/TAG lexicon")
    parser.add_argument("--product", help="product name used in reports")
    parser.add_argument("--top-k", dest="top_k", type=int, help="sentences per pros/cons list")
    parser.add_argument("--min-support", dest="min_support", type=int, help="mining support")
    parser.add_argument(
        "--max-len", dest="max_len", type=int, help="longest mined tag sequence"
    )
    parser.add_argument(
        "--format", choices=("text", "machine", "histogram"), help="output format"
    )
    parser.add_argument("--out", help="output path, or 'stdout'")
    parser.add_argument("--baseline", help="machine-format report to compare against")
    parser.add_argument(
        "--fallback",
        dest="enable_fallback_search",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="nearest-aspect fallback for unclaimed opinion words",
    )
    parser.add_argument(
        "--conjunction",
        dest="enable_conjunction_expand",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="copy pairs across coordinating conjunctions",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspectminer",
        description="Aspect-based pros/cons mining of customer reviews",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    help_text = {
        "tag": "tokenize and tag a review corpus",
        "mine": "mine frequent tag sequences",
        "extract": "extract aspect/opinion pairs",
        "summarize": "render the pros/cons summary",
        "evaluate": "score extraction against gold annotations",
    }
    for name in _COMMANDS:
        _add_common_flags(sub.add_parser(name, help=help_text[name]))
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = build_config(args)
        config.validate()
        output = _COMMANDS[args.command](config)
        _write_output(output, config.out)
    except FileNotFoundError as exc:
        print(f"error: missing file: {exc.args[0]}", file=sys.stderr)
        return EXIT_MISSING_FILE
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (AspectMinerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
