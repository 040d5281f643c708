"""Tests for aspect grouping by canonical identity and head words."""

from aspectminer.grouping import AspectGroup, group_aspects, head_key
from aspectminer.lexicons import AspectDictionary
from aspectminer.patterns import AspectOpinionPair
from aspectminer.tagger import TaggedSentence


def pair(aspect, opinion="good", orientation="positive", position=0):
    return AspectOpinionPair(
        aspect_surface=aspect,
        opinion_surface=opinion,
        orientation=orientation,
        sentence=TaggedSentence(position=position),
        aspect_index=0,
        opinion_index=1,
        pattern_name="test",
    )


class TestHeadKey:
    def test_first_word_default(self):
        assert head_key("battery life") == "battery"
        assert head_key("Battery") == "battery"

    def test_last_word(self):
        assert head_key("battery life", head="last") == "life"

    def test_plural_strip(self):
        assert head_key("batteries") == "batterie"  # naive strip, by design
        assert head_key("pictures") == "picture"
        assert head_key("transfers") == "transfer"

    def test_short_words_not_stripped(self):
        assert head_key("gas") == "gas"
        assert head_key("its") == "its"

    def test_double_s_not_stripped(self):
        assert head_key("glass") == "glass"

    def test_empty_term(self):
        assert head_key("") == ""
        assert head_key("   ") == ""


class TestGroupAspects:
    def test_singular_and_plural_merge(self):
        pairs = [pair("picture"), pair("pictures")]
        groups = group_aspects(pairs, AspectDictionary())
        assert len(groups) == 1
        assert groups[0].members == {"picture", "pictures"}

    def test_head_word_merge(self):
        pairs = [pair("battery life"), pair("battery charger"), pair("battery")]
        groups = group_aspects(pairs, AspectDictionary())
        assert len(groups) == 1
        assert groups[0].members == {"battery life", "battery charger", "battery"}

    def test_unrelated_surfaces_stay_apart(self):
        pairs = [pair("screen"), pair("sound")]
        groups = group_aspects(pairs, AspectDictionary())
        assert len(groups) == 2

    def test_canonical_key_bridges_synonyms(self):
        # "audio" and "sound" share no head word; the dictionary links them
        d = AspectDictionary(entries={"sound": "sound", "audio": "sound"})
        pairs = [pair("audio"), pair("sound")]
        groups = group_aspects(pairs, d)
        assert len(groups) == 1
        assert groups[0].canonical_label == "sound"

    def test_label_prefers_shortest_canonical(self):
        d = AspectDictionary(
            entries={"battery": "battery", "battery life": "battery life"}
        )
        pairs = [pair("battery life"), pair("battery")]
        groups = group_aspects(pairs, d)
        assert len(groups) == 1
        assert groups[0].canonical_label == "battery"

    def test_label_falls_back_to_shortest_member(self):
        pairs = [pair("carrying strap"), pair("strap")]
        groups = group_aspects(pairs, AspectDictionary())
        # "strap" vs "carrying strap": no dictionary entry, shortest member wins
        assert len(groups) == 2 or groups[0].canonical_label == "strap"

    def test_pairs_preserved_and_counted(self):
        pairs = [
            pair("screen", "great", "positive"),
            pair("screen", "awful", "negative"),
            pair("screens", "big", "positive"),
        ]
        groups = group_aspects(pairs, AspectDictionary())
        assert len(groups) == 1
        g = groups[0]
        assert g.positive_count == 2
        assert g.negative_count == 1
        assert len(g.pairs) == 3

    def test_every_pair_lands_in_exactly_one_group(self):
        pairs = [
            pair("battery"),
            pair("battery life"),
            pair("sound"),
            pair("sound quality"),
            pair("screen"),
        ]
        groups = group_aspects(pairs, AspectDictionary())
        total = sum(len(g.pairs) for g in groups)
        assert total == len(pairs)
        all_members = [m for g in groups for m in g.members]
        assert len(all_members) == len(set(all_members))

    def test_groups_sorted_by_label(self):
        pairs = [pair("zoom"), pair("battery"), pair("screen")]
        groups = group_aspects(pairs, AspectDictionary())
        labels = [g.canonical_label for g in groups]
        assert labels == sorted(labels)

    def test_empty_input(self):
        assert group_aspects([], AspectDictionary()) == []

    def test_case_folding(self):
        pairs = [pair("Screen"), pair("screen")]
        groups = group_aspects(pairs, AspectDictionary())
        assert len(groups) == 1
        assert groups[0].members == {"screen"}
        assert len(groups[0].pairs) == 2

    def test_last_head_position(self):
        pairs = [pair("sound quality"), pair("picture quality")]
        d = AspectDictionary()
        by_first = group_aspects(pairs, d, head="first")
        by_last = group_aspects(pairs, d, head="last")
        assert len(by_first) == 2
        assert len(by_last) == 1

    def test_idempotent_on_labels(self):
        # regrouping the produced labels must not split or merge anything
        d = AspectDictionary(entries={"sound": "sound", "audio": "sound"})
        pairs = [pair("audio"), pair("sound"), pair("screen")]
        first = group_aspects(pairs, d)
        relabeled = [pair(g.canonical_label) for g in first]
        second = group_aspects(relabeled, d)
        assert len(second) == len(first)

    def test_group_is_value_object(self):
        g = AspectGroup(
            canonical_label="screen", members=frozenset({"screen"}), pairs=()
        )
        assert g.positive_count == 0
        assert g.negative_count == 0
