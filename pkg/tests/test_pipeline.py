"""Tests for resource resolution and corpus-level processing."""

import shutil

import pytest

from aspectminer.errors import ParseError
from aspectminer.pipeline import (
    DATA_ENV_VAR,
    DEFAULT_FILES,
    data_dir,
    default_path,
    extract_corpus,
    load_pretagged_file,
    load_resources,
    summarize_corpus,
    tag_corpus,
)
from aspectminer.corpus import parse_corpus_file
from aspectminer.summary import render


class TestDataDir:
    def test_default_is_bundled_directory(self, monkeypatch):
        monkeypatch.delenv(DATA_ENV_VAR, raising=False)
        d = data_dir()
        assert (d / "patterns.txt").is_file()
        assert d.name == "data"

    def test_env_override(self, monkeypatch, tmp_path):
        monkeypatch.setenv(DATA_ENV_VAR, str(tmp_path))
        assert data_dir() == tmp_path
        assert default_path("patterns") == tmp_path / "patterns.txt"

    def test_every_default_file_exists(self, monkeypatch):
        monkeypatch.delenv(DATA_ENV_VAR, raising=False)
        for resource in DEFAULT_FILES:
            assert default_path(resource).is_file(), resource


class TestLoadResources:
    def test_bundled_defaults(self, resources):
        assert len(resources.pattern_set) == 11
        assert resources.tag_lexicon["the"] == "DT"
        assert resources.tag_weights.weight("JJS") == 3

    def test_selective_override(self, tmp_path):
        pos = tmp_path / "pos.txt"
        pos.write_text("stellar\n", encoding="utf-8")
        res = load_resources(pos_lex=pos)
        assert res.opinion_lexicon.polarity("stellar") == "positive"
        # everything else still comes from the bundled files
        assert res.opinion_lexicon.polarity("terrible") == "negative"
        assert len(res.pattern_set) == 11

    def test_env_redirect_missing_files(self, monkeypatch, tmp_path):
        monkeypatch.setenv(DATA_ENV_VAR, str(tmp_path))
        with pytest.raises(FileNotFoundError):
            load_resources()

    def test_env_redirect_to_copy(self, monkeypatch, tmp_path):
        monkeypatch.delenv(DATA_ENV_VAR, raising=False)
        shutil.copytree(data_dir(), tmp_path / "data", dirs_exist_ok=True)
        monkeypatch.setenv(DATA_ENV_VAR, str(tmp_path / "data"))
        res = load_resources()
        assert len(res.pattern_set) == 11


class TestTagCorpus:
    def test_positions_and_sources(self, resources):
        corpus = parse_corpus_file(
            "[t]great player\n##the sound is wonderful .\n", "p"
        )
        tagged = tag_corpus(corpus, resources.tagger())
        assert [t.position for t in tagged] == [0, 1]
        assert tagged[0].source is corpus.sentences[0]
        assert tagged[0].source.is_title
        assert tagged[1].tags() == ["DT", "NN", "VBZ", "JJ", "."]

    def test_empty_sentence_keeps_slot(self, resources):
        corpus = parse_corpus_file("##\n##real text here .\n", "p")
        tagged = tag_corpus(corpus, resources.tagger())
        assert len(tagged) == 2
        assert len(tagged[0]) == 0
        assert tagged[0].source is corpus.sentences[0]


class TestLoadPretaggedFile:
    def test_without_corpus(self, tmp_path):
        f = tmp_path / "p.txt"
        f.write_text("a/DT b/NN\n\nc/JJ d/NN\n", encoding="utf-8")
        tagged = load_pretagged_file(f)
        assert len(tagged) == 2  # blank line skipped
        assert tagged[0].source is None
        assert [t.position for t in tagged] == [0, 1]

    def test_aligned_with_corpus(self, tmp_path):
        corpus = parse_corpus_file("sound[+2]##good sound .\n##bad .\n", "p")
        f = tmp_path / "p.txt"
        f.write_text("good/JJ sound/NN ./.\nbad/JJ ./.\n", encoding="utf-8")
        tagged = load_pretagged_file(f, corpus)
        assert tagged[0].source is corpus.sentences[0]
        assert tagged[1].source is corpus.sentences[1]

    def test_count_mismatch(self, tmp_path):
        corpus = parse_corpus_file("##one .\n##two .\n", "p")
        f = tmp_path / "p.txt"
        f.write_text("one/CD ./.\n", encoding="utf-8")
        with pytest.raises(ParseError) as exc:
            load_pretagged_file(f, corpus)
        assert "1 pretagged lines for 2 corpus sentences" in str(exc.value)

    def test_bad_line_reports_position(self, tmp_path):
        f = tmp_path / "p.txt"
        f.write_text("a/DT\nbroken-line\n", encoding="utf-8")
        with pytest.raises(ParseError) as exc:
            load_pretagged_file(f)
        assert exc.value.line == 2

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_pretagged_file(tmp_path / "absent.txt")

    def test_bundled_fixtures_align(self, sample_corpus, sample_tagged):
        assert len(sample_tagged) == len(sample_corpus.sentences) == 30
        for tagged, sentence in zip(sample_tagged, sample_corpus.sentences):
            assert tagged.source is sentence


class TestExtractCorpus:
    def test_sample_pair_census(self, resources, sample_tagged):
        # [DERIVED] hand-traced over all thirty bundled sample sentences
        pairs = extract_corpus(sample_tagged, resources)
        assert len(pairs) == 23
        positive = sum(1 for p in pairs if p.orientation == "positive")
        assert positive == 17
        assert len(pairs) - positive == 6

    def test_order_follows_corpus(self, resources, sample_tagged):
        pairs = extract_corpus(sample_tagged, resources)
        positions = [p.sentence.position for p in pairs]
        assert positions == sorted(positions)

    def test_fallback_off_shrinks_census(self, resources, sample_tagged):
        default = extract_corpus(sample_tagged, resources)
        trimmed = extract_corpus(sample_tagged, resources, fallback=False)
        assert len(trimmed) < len(default)
        assert all(p.pattern_name != "nearest-aspect" for p in trimmed)


class TestSummarizeCorpus:
    def test_sample_summary_totals(self, resources, sample_tagged):
        summary, groups, scores = summarize_corpus(
            sample_tagged, resources, top_k=3, product_name="mp3 player"
        )
        assert summary.total == 23
        assert summary.positive_total == 17
        assert summary.negative_total == 6
        assert (summary.positive_pct, summary.negative_pct) == (74, 26)
        assert summary.groups[0].label == "sound"
        assert (summary.groups[0].positive_count, summary.groups[0].negative_count) == (3, 1)

    def test_machine_header_line(self, resources, sample_tagged):
        summary, _, _ = summarize_corpus(
            sample_tagged, resources, top_k=3, product_name="mp3 player"
        )
        first = render(summary, "machine").splitlines()[0]
        assert first == "summary\tmp3 player\t23\t74\t26"

    def test_groups_cover_all_pairs(self, resources, sample_tagged):
        summary, groups, _ = summarize_corpus(sample_tagged, resources)
        assert sum(g.positive_count + g.negative_count for g in groups) == 23
