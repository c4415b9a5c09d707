"""Knockoff sampling for discrete Markov chains and hidden Markov models.

The chain knockoff sampler draws each group's copy from the exact law of
that group given every other true state and all earlier knockoff draws,
computed by dynamic programming over the chain.  Sequential conditional
sampling of this form yields group-swap exchangeability; the enumeration
helpers below expose the sampler's closed-form conditionals so tests can
verify that property exactly on small instances.

The conditional (end-stage) construction samples knockoffs only for
candidate groups: the chain is cut into clips (maximal runs of consecutive
candidate groups), each clip is extended by its flanking adjacent
positions, a full knockoff copy of the extended sub-chain is drawn, and the
flank copies are discarded.  By the Markov property, conditioning on the
adjacent set is equivalent to conditioning on the whole complement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .core import GroupPartition
from .errors import ConfigError, InvalidDataError

MAX_STATES = 16
MAX_POSITIONS = 5000

_ROW_SUM_TOL = 1e-12


def _check_stochastic(mat: np.ndarray, what: str) -> None:
    if np.any(mat < 0):
        raise InvalidDataError(f"{what} has negative entries")
    sums = mat.sum(axis=-1)
    if np.any(np.abs(sums - 1.0) > _ROW_SUM_TOL):
        raise InvalidDataError(
            f"{what} rows must sum to 1 within {_ROW_SUM_TOL} "
            f"(worst deviation {np.max(np.abs(sums - 1.0)):.3e})"
        )


@dataclass(frozen=True)
class DiscreteMarkovChain:
    """A finite inhomogeneous Markov chain over ``num_states`` states.

    ``trans[j]`` is the row-stochastic transition matrix from position j to
    position j+1, so a chain of length p carries p-1 matrices.
    """

    num_positions: int
    num_states: int
    init: np.ndarray
    trans: tuple

    def __post_init__(self):
        p, k = self.num_positions, self.num_states
        if p < 1:
            raise InvalidDataError("chain length must be >= 1")
        if p > MAX_POSITIONS:
            raise ConfigError(f"chain length {p} exceeds the cap {MAX_POSITIONS}")
        if not (1 <= k <= MAX_STATES):
            raise ConfigError(f"state count {k} outside [1, {MAX_STATES}]")
        init = np.asarray(self.init, dtype=float)
        if init.shape != (k,):
            raise InvalidDataError(f"init must have shape ({k},)")
        _check_stochastic(init[None, :], "initial distribution")
        trans = tuple(np.asarray(t, dtype=float) for t in self.trans)
        if len(trans) != p - 1:
            raise InvalidDataError(f"need {p - 1} transition matrices, got {len(trans)}")
        for j, t in enumerate(trans):
            if t.shape != (k, k):
                raise InvalidDataError(f"transition {j} must be {k}x{k}")
            _check_stochastic(t, f"transition matrix {j}")
        object.__setattr__(self, "init", init)
        object.__setattr__(self, "trans", trans)

    def marginals(self) -> np.ndarray:
        """Marginal state distribution at every position, shape (p, K)."""
        out = np.empty((self.num_positions, self.num_states))
        out[0] = self.init
        for j in range(self.num_positions - 1):
            out[j + 1] = out[j] @ self.trans[j]
        return out

    def restrict(self, lo: int, hi: int) -> "DiscreteMarkovChain":
        """Sub-chain over positions lo..hi with the exact marginal at lo."""
        if not (0 <= lo <= hi < self.num_positions):
            raise InvalidDataError(f"bad sub-chain range [{lo}, {hi}]")
        init = self.marginals()[lo]
        return DiscreteMarkovChain(
            num_positions=hi - lo + 1,
            num_states=self.num_states,
            init=init,
            trans=self.trans[lo:hi],
        )

    def path_logpmf_table(self) -> Dict[tuple, float]:
        """Exact pmf of every state path; enumeration helper for tests."""
        k, p = self.num_states, self.num_positions
        out = {}
        for path in itertools.product(range(k), repeat=p):
            prob = self.init[path[0]]
            for j in range(p - 1):
                prob *= self.trans[j][path[j], path[j + 1]]
            if prob > 0.0:
                out[path] = prob
        return out

    def sample_path(self, rng: np.random.Generator) -> np.ndarray:
        states = np.empty(self.num_positions, dtype=np.int64)
        states[0] = rng.choice(self.num_states, p=self.init)
        for j in range(self.num_positions - 1):
            states[j + 1] = rng.choice(self.num_states, p=self.trans[j][states[j]])
        return states


@dataclass(frozen=True)
class HiddenMarkovModel:
    """A latent Markov chain with per-position emission matrices (K x E)."""

    chain: DiscreteMarkovChain
    emission: tuple

    def __post_init__(self):
        ems = tuple(np.asarray(e, dtype=float) for e in self.emission)
        if len(ems) != self.chain.num_positions:
            raise InvalidDataError("need one emission matrix per position")
        k = self.chain.num_states
        e_sym = ems[0].shape[1] if ems[0].ndim == 2 else -1
        for j, e in enumerate(ems):
            if e.ndim != 2 or e.shape[0] != k or e.shape[1] != e_sym:
                raise InvalidDataError(
                    f"emission {j} must be {k}x{e_sym} (all positions share "
                    "the symbol alphabet)"
                )
            _check_stochastic(e, f"emission matrix {j}")
        object.__setattr__(self, "emission", ems)

    @property
    def num_symbols(self) -> int:
        return self.emission[0].shape[1]

    @property
    def num_positions(self) -> int:
        return self.chain.num_positions

    def sample_row(self, rng: np.random.Generator) -> np.ndarray:
        latent = self.chain.sample_path(rng)
        return np.array(
            [rng.choice(self.num_symbols, p=self.emission[j][latent[j]])
             for j in range(self.num_positions)],
            dtype=np.int64,
        )


# ---------------------------------------------------------------------------
# Posterior sampling of the latent chain
# ---------------------------------------------------------------------------


def _check_symbols(hmm: HiddenMarkovModel, x_row: np.ndarray) -> np.ndarray:
    x = np.asarray(x_row)
    if x.shape != (hmm.num_positions,):
        raise InvalidDataError(
            f"observation row must have length {hmm.num_positions}"
        )
    if np.any(x < 0) or np.any(x >= hmm.num_symbols):
        raise InvalidDataError("observation symbols out of range")
    return x.astype(np.int64)


def sample_posterior_chain(
    hmm: HiddenMarkovModel,
    x_row: Sequence[int],
    rng: np.random.Generator,
) -> np.ndarray:
    """Exact draw from the law of the latent chain given the observed row.

    Backward message passing followed by forward sampling; messages are
    renormalized per position so long chains do not underflow.
    """
    x = _check_symbols(hmm, x_row)
    chain, ems = hmm.chain, hmm.emission
    p, k = chain.num_positions, chain.num_states

    beta = np.ones((p, k))
    for j in range(p - 2, -1, -1):
        msg = chain.trans[j] @ (ems[j + 1][:, x[j + 1]] * beta[j + 1])
        total = msg.sum()
        if total <= 0.0:
            raise InvalidDataError(
                f"observation sequence has zero likelihood at position {j + 1}"
            )
        beta[j] = msg / total

    states = np.empty(p, dtype=np.int64)
    weights = chain.init * ems[0][:, x[0]] * beta[0]
    total = weights.sum()
    if total <= 0.0:
        raise InvalidDataError("observation sequence has zero likelihood")
    states[0] = rng.choice(k, p=weights / total)
    for j in range(p - 1):
        weights = chain.trans[j][states[j]] * ems[j + 1][:, x[j + 1]] * beta[j + 1]
        total = weights.sum()
        if total <= 0.0:
            raise InvalidDataError(
                f"observation sequence has zero likelihood at position {j + 1}"
            )
        states[j + 1] = rng.choice(k, p=weights / total)
    return states


# ---------------------------------------------------------------------------
# Chain knockoffs by sequential exact conditionals
# ---------------------------------------------------------------------------


def _validate_chain_inputs(
    chain: DiscreteMarkovChain, h_row: Sequence[int], partition: GroupPartition
) -> np.ndarray:
    h = np.asarray(h_row, dtype=np.int64)
    if h.shape != (chain.num_positions,):
        raise InvalidDataError(f"state row must have length {chain.num_positions}")
    if np.any(h < 0) or np.any(h >= chain.num_states):
        raise InvalidDataError("states out of range")
    if partition.n_features != chain.num_positions:
        raise InvalidDataError("partition does not cover the chain")
    return h


def _group_potentials(
    chain: DiscreteMarkovChain,
    h: np.ndarray,
    a: int,
    b: int,
    feedback: Optional[np.ndarray],
):
    """Boundary potentials of the conditional law of positions a..b.

    Returns (w, e): w[s] multiplies the state at position a (left-boundary
    transition or the initial law, times the previous group's draw
    probability as a function of that state); e[s] multiplies the state at
    position b (transition into the true state at b+1, or ones at the end).
    """
    if a == 0:
        w = chain.init.copy()
    else:
        w = chain.trans[a - 1][h[a - 1], :].copy()
    if feedback is not None:
        w = w * feedback
    if b < chain.num_positions - 1:
        e = chain.trans[b][:, h[b + 1]].copy()
    else:
        e = np.ones(chain.num_states)
    return w, e


def _group_feedback(
    chain: DiscreteMarkovChain,
    w: np.ndarray,
    a: int,
    b: int,
    drawn: np.ndarray,
) -> Optional[np.ndarray]:
    """Probability of the realized group draw as a function of the state at
    position b+1 (None when the group ends the chain).

    num(z) follows the drawn path into z; den(z) sums every path into z by
    forward DP.  Entries with den(z) = 0 denote next states unreachable
    jointly with the conditioning and get feedback 0.
    """
    if b >= chain.num_positions - 1:
        return None
    num = w[drawn[0]]
    alpha = w.copy()
    for j in range(a, b):
        num *= chain.trans[j][drawn[j - a], drawn[j - a + 1]]
        alpha = alpha @ chain.trans[j]
    t_out = chain.trans[b]
    den = alpha @ t_out
    num_vec = num * t_out[drawn[b - a], :]
    out = np.zeros(chain.num_states)
    ok = den > 0.0
    out[ok] = num_vec[ok] / den[ok]
    return out


def _sample_group(
    chain: DiscreteMarkovChain,
    w: np.ndarray,
    e: np.ndarray,
    a: int,
    b: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Draw positions a..b from the law proportional to w * transitions * e."""
    size = b - a + 1
    k = chain.num_states
    beta = np.empty((size, k))
    beta[-1] = e
    for idx in range(size - 2, -1, -1):
        beta[idx] = chain.trans[a + idx] @ beta[idx + 1]
    drawn = np.empty(size, dtype=np.int64)
    weights = w * beta[0]
    total = weights.sum()
    if total <= 0.0:
        raise InvalidDataError("infeasible state sequence for this chain")
    drawn[0] = rng.choice(k, p=weights / total)
    for idx in range(size - 1):
        weights = chain.trans[a + idx][drawn[idx]] * beta[idx + 1]
        total = weights.sum()
        if total <= 0.0:
            raise InvalidDataError("infeasible state sequence for this chain")
        drawn[idx + 1] = rng.choice(k, p=weights / total)
    return drawn


def sample_chain_knockoff(
    chain: DiscreteMarkovChain,
    h_row: Sequence[int],
    partition: GroupPartition,
    rng: np.random.Generator,
) -> np.ndarray:
    """Draw a group-exchangeable knockoff copy of a Markov chain path.

    Groups are processed in order; each group's copy is drawn from the exact
    conditional law of that group given all other true states and the
    earlier copies.
    """
    h = _validate_chain_inputs(chain, h_row, partition)
    out = np.empty_like(h)
    feedback: Optional[np.ndarray] = None
    for g in partition.groups:
        a, b = g[0], g[-1]
        w, e = _group_potentials(chain, h, a, b, feedback)
        drawn = _sample_group(chain, w, e, a, b, rng)
        out[a : b + 1] = drawn
        feedback = _group_feedback(chain, w, a, b, drawn)
    return out


def group_conditional_pmf(
    chain: DiscreteMarkovChain,
    h_row: Sequence[int],
    partition: GroupPartition,
    group_index: int,
    earlier_draws: Sequence[Sequence[int]],
) -> np.ndarray:
    """Exact pmf over one group's knockoff configurations (enumeration
    helper; cost K**|group|, intended for small test instances).

    ``earlier_draws`` holds the realized knockoff values of the groups
    before ``group_index``, in partition order.
    """
    h = _validate_chain_inputs(chain, h_row, partition)
    feedback: Optional[np.ndarray] = None
    for gi in range(group_index):
        g = partition.groups[gi]
        a, b = g[0], g[-1]
        w, _ = _group_potentials(chain, h, a, b, feedback)
        drawn = np.asarray(earlier_draws[gi], dtype=np.int64)
        feedback = _group_feedback(chain, w, a, b, drawn)
    g = partition.groups[group_index]
    a, b = g[0], g[-1]
    w, e = _group_potentials(chain, h, a, b, feedback)
    size = b - a + 1
    k = chain.num_states
    pmf = np.zeros((k,) * size)
    for config in itertools.product(range(k), repeat=size):
        prob = w[config[0]]
        for idx in range(size - 1):
            prob *= chain.trans[a + idx][config[idx], config[idx + 1]]
        prob *= e[config[-1]]
        pmf[config] = prob
    total = pmf.sum()
    if total <= 0.0:
        raise InvalidDataError("infeasible state sequence for this chain")
    return pmf / total


def chain_knockoff_pmf(
    chain: DiscreteMarkovChain,
    h_row: Sequence[int],
    partition: GroupPartition,
) -> Dict[tuple, float]:
    """Exact joint pmf of the full knockoff path the sampler produces.

    Walks the sequential construction, enumerating every group
    configuration; exponential in p, for test-scale chains only.
    """
    h = _validate_chain_inputs(chain, h_row, partition)
    k = chain.num_states
    results: Dict[tuple, float] = {}

    def recurse(gi: int, feedback: Optional[np.ndarray], prefix: tuple, prob: float):
        if gi == len(partition.groups):
            results[prefix] = results.get(prefix, 0.0) + prob
            return
        g = partition.groups[gi]
        a, b = g[0], g[-1]
        w, e = _group_potentials(chain, h, a, b, feedback)
        size = b - a + 1
        weights = {}
        for config in itertools.product(range(k), repeat=size):
            pr = w[config[0]]
            for idx in range(size - 1):
                pr *= chain.trans[a + idx][config[idx], config[idx + 1]]
            pr *= e[config[-1]]
            if pr > 0.0:
                weights[config] = pr
        total = sum(weights.values())
        if total <= 0.0:
            raise InvalidDataError("infeasible state sequence for this chain")
        for config, pr in weights.items():
            drawn = np.asarray(config, dtype=np.int64)
            fb = _group_feedback(chain, w, a, b, drawn)
            recurse(gi + 1, fb, prefix + config, prob * pr / total)

    recurse(0, None, (), 1.0)
    return results


# ---------------------------------------------------------------------------
# Clip decomposition for conditional (end-stage) knockoffs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Clip:
    """A maximal run of consecutive candidate groups plus its flanks."""

    group_indices: tuple
    start: int  # first member feature
    stop: int   # last member feature
    flank_left: Optional[int]
    flank_right: Optional[int]


@dataclass(frozen=True)
class ClipDecomposition:
    candidate_groups: frozenset
    members: frozenset     # E: features inside candidate groups
    adjacent: frozenset    # A(E): neighbors of E outside E
    clips: tuple


def build_clips(partition: GroupPartition, candidates: Sequence[int]) -> ClipDecomposition:
    """Cut the candidate groups into clips and compute the adjacent set.

    A(E) = {j not in E : j-1 in E or j+1 in E}; each clip carries the
    flanking adjacent feature on either side (None at a chain boundary).
    """
    cand = sorted(set(int(c) for c in candidates))
    n_groups = partition.n_groups
    p = partition.n_features
    for c in cand:
        if not (0 <= c < n_groups):
            raise InvalidDataError(f"candidate group {c} out of range")
    members = set()
    for c in cand:
        members.update(partition.groups[c])
    adjacent = {
        j
        for j in range(p)
        if j not in members and ((j - 1) in members or (j + 1) in members)
    }
    clips: List[Clip] = []
    run: List[int] = []

    def flush(run_groups: List[int]):
        if not run_groups:
            return
        start = partition.groups[run_groups[0]][0]
        stop = partition.groups[run_groups[-1]][-1]
        clips.append(
            Clip(
                group_indices=tuple(run_groups),
                start=start,
                stop=stop,
                flank_left=start - 1 if start > 0 else None,
                flank_right=stop + 1 if stop < p - 1 else None,
            )
        )

    for c in cand:
        if run and c == run[-1] + 1:
            run.append(c)
        else:
            flush(run)
            run = [c]
    flush(run)
    return ClipDecomposition(
        candidate_groups=frozenset(cand),
        members=frozenset(members),
        adjacent=frozenset(adjacent),
        clips=tuple(clips),
    )


def _clip_subpartition(
    partition: GroupPartition, clip: Clip
) -> Tuple[int, int, GroupPartition]:
    """Sub-chain span of a clip (flanks included) and its local partition.

    Flank positions become singleton groups whose knockoff copies are drawn
    and then discarded.
    """
    lo = clip.flank_left if clip.flank_left is not None else clip.start
    hi = clip.flank_right if clip.flank_right is not None else clip.stop
    groups = []
    if clip.flank_left is not None:
        groups.append((0,))
    for gi in clip.group_indices:
        groups.append(tuple(j - lo for j in partition.groups[gi]))
    if clip.flank_right is not None:
        groups.append((hi - lo,))
    return lo, hi, GroupPartition(tuple(groups))


def sample_clip_chain_knockoff(
    chain: DiscreteMarkovChain,
    h_row: Sequence[int],
    partition: GroupPartition,
    clips: ClipDecomposition,
    rng: np.random.Generator,
) -> Dict[int, int]:
    """Latent knockoff states for the candidate positions of every clip.

    Clips are sampled independently given the true states at their flanks;
    the flank copies drawn along the way are discarded.
    """
    h = np.asarray(h_row, dtype=np.int64)
    out: Dict[int, int] = {}
    for clip in clips.clips:
        lo, hi, sub_partition = _clip_subpartition(partition, clip)
        sub_chain = chain.restrict(lo, hi)
        draw = sample_chain_knockoff(sub_chain, h[lo : hi + 1], sub_partition, rng)
        for j in range(clip.start, clip.stop + 1):
            out[j] = int(draw[j - lo])
    return out


def sample_conditional_hmm_knockoff(
    hmm: HiddenMarkovModel,
    x_row: Sequence[int],
    partition: GroupPartition,
    clips: ClipDecomposition,
    rng: np.random.Generator,
) -> Dict[int, int]:
    """Conditional HMM knockoff symbols for candidate features only.

    Steps: draw the latent chain from its posterior given the full row,
    draw latent knockoffs per clip, then emit observable symbols at the
    candidate positions.
    """
    x = _check_symbols(hmm, x_row)
    latent = sample_posterior_chain(hmm, x, rng)
    latent_knock = sample_clip_chain_knockoff(hmm.chain, latent, partition, clips, rng)
    out: Dict[int, int] = {}
    for j, state in latent_knock.items():
        out[j] = int(rng.choice(hmm.num_symbols, p=hmm.emission[j][state]))
    return out


def sample_hmm_knockoff_row(
    hmm: HiddenMarkovModel,
    x_row: Sequence[int],
    partition: GroupPartition,
    rng: np.random.Generator,
) -> np.ndarray:
    """Unconditional HMM knockoff copy of one observation row."""
    x = _check_symbols(hmm, x_row)
    latent = sample_posterior_chain(hmm, x, rng)
    latent_knock = sample_chain_knockoff(hmm.chain, latent, partition, rng)
    out = np.empty_like(x)
    for j in range(hmm.num_positions):
        out[j] = rng.choice(hmm.num_symbols, p=hmm.emission[j][latent_knock[j]])
    return out


class HmmKnockoffSampler:
    """Matrix-level knockoff sampler backed by a hidden Markov model.

    Satisfies the same sampling interface as the Gaussian model: a function
    of the covariate matrix and a random stream only.
    """

    def __init__(self, hmm: HiddenMarkovModel, partition: Optional[GroupPartition] = None):
        self.hmm = hmm
        if partition is None:
            from .core import make_trivial_partition

            partition = make_trivial_partition(hmm.num_positions)
        self.partition = partition

    def sample_matrix(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        x = np.asarray(x)
        out = np.empty_like(x, dtype=float)
        for i in range(x.shape[0]):
            out[i] = sample_hmm_knockoff_row(
                self.hmm, x[i].astype(np.int64), self.partition, rng
            )
        return out


# ---------------------------------------------------------------------------
# Adjacency-constrained clustering
# ---------------------------------------------------------------------------


def adjacency_constrained_clustering(
    corr: np.ndarray, resolution: float
) -> GroupPartition:
    """Greedy agglomeration of adjacent features by average |correlation|.

    Only neighboring groups may merge, so groups stay contiguous.  The
    number of groups is ceil(resolution * p); resolution 1 returns the
    trivial partition and resolution 1/p a single group.
    """
    corr = np.asarray(corr, dtype=float)
    p = corr.shape[0]
    if corr.ndim != 2 or corr.shape != (p, p):
        raise InvalidDataError("corr must be square")
    if not np.allclose(corr, corr.T, atol=1e-10):
        raise InvalidDataError("corr must be symmetric")
    if not np.allclose(np.diag(corr), 1.0, atol=1e-8):
        raise InvalidDataError("corr must have unit diagonal")
    if not (0.0 < resolution <= 1.0):
        raise ConfigError(f"resolution must lie in (0, 1], got {resolution}")
    target = int(np.ceil(resolution * p))
    groups: List[List[int]] = [[j] for j in range(p)]
    a = np.abs(corr)
    while len(groups) > target:
        best_score = -1.0
        best_i = 0
        for i in range(len(groups) - 1):
            left, right = groups[i], groups[i + 1]
            score = float(np.mean(a[np.ix_(left, right)]))
            if score > best_score + 1e-15:
                best_score = score
                best_i = i
        groups[best_i] = groups[best_i] + groups.pop(best_i + 1)
    return GroupPartition(tuple(tuple(g) for g in groups))


# ---------------------------------------------------------------------------
# HMM parameter file format
# ---------------------------------------------------------------------------


def load_hmm(path) -> HiddenMarkovModel:
    """Read an HMM from the documented whitespace text format.

    Token stream (after stripping '#' comments): K E p, then the K initial
    probabilities, then (p-1) K-by-K transition matrices row-major, then p
    K-by-E emission matrices row-major.
    """
    tokens: List[str] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0]
            tokens.extend(line.split())
    try:
        values = [float(t) for t in tokens]
    except ValueError as exc:
        raise InvalidDataError(f"{path}: non-numeric token ({exc})") from exc
    if len(values) < 3:
        raise InvalidDataError(f"{path}: truncated header")
    k, e, p = (int(v) for v in values[:3])
    body = values[3:]
    expect = k + (p - 1) * k * k + p * k * e
    if len(body) != expect:
        raise InvalidDataError(
            f"{path}: expected {expect} numbers for K={k}, E={e}, p={p}, got {len(body)}"
        )
    pos = 0
    init = np.array(body[pos : pos + k])
    pos += k
    trans = []
    for _ in range(p - 1):
        trans.append(np.array(body[pos : pos + k * k]).reshape(k, k))
        pos += k * k
    ems = []
    for _ in range(p):
        ems.append(np.array(body[pos : pos + k * e]).reshape(k, e))
        pos += k * e
    chain = DiscreteMarkovChain(
        num_positions=p, num_states=k, init=init, trans=tuple(trans)
    )
    return HiddenMarkovModel(chain=chain, emission=tuple(ems))


def save_hmm(hmm: HiddenMarkovModel, path) -> None:
    """Write an HMM in the format `load_hmm` reads."""
    k = hmm.chain.num_states
    e = hmm.num_symbols
    p = hmm.num_positions
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# hidden markov model: K E p, init, transitions, emissions\n")
        fh.write(f"{k} {e} {p}\n")
        fh.write(" ".join(repr(v) for v in hmm.chain.init) + "\n")
        for t in hmm.chain.trans:
            for row in t:
                fh.write(" ".join(repr(v) for v in row) + "\n")
        for em in hmm.emission:
            for row in em:
                fh.write(" ".join(repr(v) for v in row) + "\n")
