import pytest

from stoplex import (
    DecodeError,
    DomainError,
    EmptyCorpus,
    build_lexicon,
    collect_input_files,
    load_corpus,
    load_corpus_from_paths,
)


def test_toy_corpus_shape(toy_corpus):
    assert toy_corpus.doc_count == 3
    assert toy_corpus.token_total == 8
    assert [d.doc_index for d in toy_corpus.documents] == [1, 2, 3]
    assert [d.name for d in toy_corpus.documents] == ["d1", "d2", "d3"]


def test_single_document():
    corpus = load_corpus([("only", "a a a")])
    assert corpus.doc_count == 1
    assert corpus.token_total == 3


def test_zero_sources_raise():
    with pytest.raises(EmptyCorpus):
        load_corpus([])


def test_bad_utf8_names_source():
    with pytest.raises(DecodeError) as excinfo:
        load_corpus([("good", "salom"), ("broken", b"ol\xffma")])
    assert excinfo.value.name == "broken"


def test_bytes_sources_decode():
    corpus = load_corpus([("d", "olma nok".encode("utf-8"))])
    assert corpus.documents[0].tokens == ("olma", "nok")


def test_toy_lexicon_entries(toy_lexicon):
    entries = {e.surface: e for e in toy_lexicon}
    assert [e.surface for e in toy_lexicon] == ["olma", "nok", "uzum"]
    assert (entries["olma"].first_index, entries["nok"].first_index, entries["uzum"].first_index) == (1, 2, 3)
    assert entries["olma"].per_doc_counts == (2, 0, 1)
    assert entries["nok"].per_doc_counts == (1, 1, 0)
    assert entries["uzum"].per_doc_counts == (0, 1, 2)
    assert all(e.doc_frequency == 2 for e in toy_lexicon)
    assert all(e.idf is None and e.weight is None and e.probability is None for e in toy_lexicon)


def test_single_doc_lexicon():
    lexicon = build_lexicon(load_corpus([("d", "a b a")]))
    assert [(e.surface, e.first_index, e.doc_frequency) for e in lexicon] == [
        ("a", 1, 1),
        ("b", 2, 1),
    ]


def test_identical_documents():
    text = "bir ikki uch bir"
    corpus = load_corpus([(f"d{i}", text) for i in range(1, 5)])
    lexicon = build_lexicon(corpus)
    assert lexicon.size == 3
    assert all(e.doc_frequency == corpus.doc_count for e in lexicon)


def test_lexicon_invariants(toy_corpus, toy_lexicon):
    indices = sorted(e.first_index for e in toy_lexicon)
    assert indices == list(range(1, toy_lexicon.size + 1))
    assert sum(e.total_count for e in toy_lexicon) == toy_corpus.token_total
    n = toy_corpus.doc_count
    for e in toy_lexicon:
        assert 1 <= e.doc_frequency <= n
        assert e.doc_frequency == sum(1 for c in e.per_doc_counts if c > 0)


def test_determinism(toy_corpus):
    assert build_lexicon(toy_corpus) == build_lexicon(toy_corpus)


def test_lexicon_surface_lookup(toy_lexicon):
    assert toy_lexicon.entry("nok").first_index == 2


def test_load_from_paths_uses_stems(tmp_path):
    (tmp_path / "b.txt").write_text("nok uzum", encoding="utf-8")
    (tmp_path / "a.txt").write_text("olma", encoding="utf-8")
    corpus = load_corpus_from_paths(collect_input_files([tmp_path]))
    assert [d.name for d in corpus.documents] == ["a", "b"]  # lexicographic in a dir


def test_collect_keeps_explicit_list_order(tmp_path):
    first = tmp_path / "z.txt"
    second = tmp_path / "a.txt"
    first.write_text("bir", encoding="utf-8")
    second.write_text("ikki", encoding="utf-8")
    assert collect_input_files([first, second]) == [first, second]
    assert collect_input_files([first, second], order="lexicographic") == [second, first]


def test_collect_rejects_unknown_order(tmp_path):
    with pytest.raises(DomainError):
        collect_input_files([tmp_path], order="random")


def test_collect_skips_dotfiles(tmp_path):
    (tmp_path / ".hidden").write_text("x", encoding="utf-8")
    (tmp_path / "seen.txt").write_text("x", encoding="utf-8")
    assert [p.name for p in collect_input_files([tmp_path])] == ["seen.txt"]
