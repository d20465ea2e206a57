import pytest
from hypothesis import given, strategies as st

from twinhanoi.words import (
    Config,
    CoupledConfig,
    Move,
    MoveSeq,
    PegPerm,
    apply_move,
    apply_seq,
    apply_seq_coupled,
    classify,
    lcp_len,
    parity,
    relabel,
)


def seq(text):
    return MoveSeq.parse(text)


configs = st.text(alphabet="012", min_size=0, max_size=8).map(Config)
nonempty_configs = st.text(alphabet="012", min_size=1, max_size=8).map(Config)
moves = st.sampled_from("abc").map(Move)
seqs = st.text(alphabet="abc", min_size=0, max_size=12).map(MoveSeq.from_applied)
perms = st.permutations([0, 1, 2]).map(lambda p: PegPerm(tuple(p)))


class TestParsing:
    def test_config_rejects_bad_letters(self):
        with pytest.raises(ValueError):
            Config("01x")

    def test_empty_config_is_legal(self):
        assert len(Config("")) == 0

    def test_coupled_requires_equal_lengths(self):
        with pytest.raises(ValueError):
            CoupledConfig.of("00", "0")

    def test_coupled_parse_round_trip(self):
        state = CoupledConfig.parse("012,210")
        assert str(state) == "012,210"

    def test_coupled_parse_needs_comma(self):
        with pytest.raises(ValueError):
            CoupledConfig.parse("012210")

    def test_move_letters(self):
        assert Move("a").pegs == (0, 1)
        assert Move("b").pegs == (0, 2)
        assert Move("c").pegs == (1, 2)
        with pytest.raises(ValueError):
            Move("d")

    def test_seq_orders(self):
        s = MoveSeq.parse("cab")
        assert s.applied == "bac"
        assert s.display == "cab"
        assert str(s) == "cab"
        assert MoveSeq.parse("bac", order="applied").applied == "bac"
        assert s.render("applied") == "bac"

    def test_seq_product_and_then(self):
        s, t = seq("ab"), seq("c")
        # (s * t) applies t first
        assert (s * t).display == "abc"
        assert s.then(t).display == "cab"
        assert (seq("ab") ** 3).display == "ababab"

    def test_inverse_is_reversal(self):
        assert seq("cab").inverse().display == "bac"
        assert seq("").inverse().display == ""


class TestAction:
    def test_single_move_examples(self):
        assert apply_move(Move("a"), Config("2120")) == Config("2020")
        assert apply_move(Move("a"), Config("222")) == Config("222")
        assert apply_move(Move("b"), Config("2120")) == Config("0120")

    def test_sequence_examples(self):
        assert apply_seq(seq("caba"), Config("0220")) == Config("0010")
        assert apply_seq(seq(""), Config("2120")) == Config("2120")
        assert apply_seq(seq("ababa"), Config("00")) == Config("22")

    def test_coupled_examples(self):
        assert apply_seq_coupled(seq("b"), CoupledConfig.of("0", "2")) == CoupledConfig.of("2", "0")
        assert apply_seq_coupled(seq("bcacba"), CoupledConfig.of("00", "10")) == CoupledConfig.of("10", "20")
        assert apply_seq_coupled(seq("a"), CoupledConfig.of("22", "22")) == CoupledConfig.of("22", "22")

    @given(moves, configs)
    def test_moves_are_involutions(self, move, config):
        assert apply_move(move, apply_move(move, config)) == config

    @given(moves, configs)
    def test_length_preserved(self, move, config):
        assert len(apply_move(move, config)) == len(config)

    @given(moves, configs)
    def test_fixed_iff_neither_letter_present(self, move, config):
        i, j = move.pegs
        untouched = str(i) not in config.word and str(j) not in config.word
        assert (apply_move(move, config) == config) == untouched

    @given(seqs, configs, configs)
    def test_prefix_of_action_depends_only_on_prefix(self, s, head, tail):
        whole = Config(head.word + tail.word)
        assert apply_seq(s, whole).word[: len(head)] == apply_seq(s, head).word

    @given(moves, nonempty_configs)
    def test_parity_flip_off_corners(self, move, config):
        if config.is_corner():
            return
        i, j = move.pegs
        before = [parity(x, config) for x in range(3)]
        after = [parity(x, apply_move(move, config)) for x in range(3)]
        for x in range(3):
            if x in (i, j):
                assert after[x] == 1 - before[x]
            else:
                assert after[x] == before[x]

    @given(moves, nonempty_configs, nonempty_configs)
    def test_coupled_parity_conserved_off_corners(self, move, top, bottom):
        if len(top) != len(bottom) or top.is_corner() or bottom.is_corner():
            return
        state = CoupledConfig(top, bottom)
        after = apply_seq_coupled(MoveSeq(move.letter), state)
        assert all(parity(x, after) == parity(x, state) for x in range(3))

    @given(seqs, nonempty_configs, nonempty_configs)
    def test_lcp_invariant(self, s, top, bottom):
        if len(top) != len(bottom):
            return
        state = CoupledConfig(top, bottom)
        assert lcp_len(apply_seq_coupled(s, state)) == lcp_len(state)


class TestStatistics:
    def test_parity_examples(self):
        assert parity(0, Config("2120")) == 1
        assert parity(0, CoupledConfig.of("0000", "1000")) == 1
        assert parity(0, CoupledConfig.of("1000", "2000")) == 0

    def test_lcp_examples(self):
        assert lcp_len(CoupledConfig.of("000", "100")) == 0
        assert lcp_len(CoupledConfig.of("012", "012")) == 3
        assert lcp_len(CoupledConfig.of("201", "210")) == 1

    def test_classify(self):
        assert classify(Config("222")).corner
        assert not classify(Config("212")).corner
        got = classify(CoupledConfig.of("000", "100"))
        assert got.basic and got.corner
        assert not classify(CoupledConfig.of("20", "21")).basic
        with pytest.raises(ValueError):
            classify(Config(""))

    @given(st.text(alphabet="012", min_size=1, max_size=8))
    def test_basic_means_no_common_prefix(self, top):
        for lead in "012":
            bottom = lead + top[1:]
            state = CoupledConfig.of(top, bottom)
            assert classify(state).basic == (lcp_len(state) == 0)


class TestRelabel:
    def test_examples(self):
        swap = PegPerm.swap(0, 2)
        assert relabel(swap, Config("2120")) == Config("0102")
        assert relabel(swap, Move("a")) == Move("c")
        assert relabel(PegPerm.identity(), seq("cab")) == seq("cab")

    @given(perms, seqs, configs)
    def test_equivariance(self, perm, s, config):
        left = relabel(perm, apply_seq(s, config))
        right = apply_seq(relabel(perm, s), relabel(perm, config))
        assert left == right

    @given(perms, perms)
    def test_compose_and_inverse(self, p, q):
        composed = p.after(q)
        for x in range(3):
            assert composed(x) == p(q(x))
        assert p.after(p.inverse()).is_identity()

    def test_cycle_strings(self):
        assert PegPerm.identity().cycle_str() == "()"
        assert PegPerm.swap(0, 1).cycle_str() == "(01)"
        assert PegPerm((1, 2, 0)).cycle_str() == "(012)"
        assert PegPerm((2, 0, 1)).cycle_str() == "(021)"
        assert PegPerm((1, 2, 0)).is_even()
        assert not PegPerm.swap(0, 2).is_even()
