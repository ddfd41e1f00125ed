"""Independent oracles: classical digests, dense Grover simulation, Monte Carlo."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from groverfleet.verify.grover_sim import MarkedSet, closed_form_success, grover_simulate, grover_trace
from groverfleet.verify.monte_carlo import DEFAULT_SEED, HitRateEstimate, monte_carlo_hit_rate
from groverfleet.verify.ripemd160 import p2pkh_hash, ripemd160_digest
from groverfleet.verify.sha256 import double_sha256, sha256_digest

SHA256_VECTORS = (
    (b"", "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"),
    (b"abc", "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"),
    (
        b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1",
    ),
    (
        b"abcdefghbcdefghicdefghijdefghijkefghijklfghijklmghijklmnhijklmnoijklmnopjklmnopqklmnopqrlmnopqrsmnopqrstnopqrstu",
        "cf5b16a778af8380036ce59e7b0492370b249b11e8f07a51afac45037afee9d1",
    ),
    (b"a" * 1_000_000, "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0"),
)

RIPEMD160_VECTORS = (
    (b"", "9c1185a5c5e9fc54612808977ee8f548b2258d31"),
    (b"a", "0bdc9d2d256b3ee9daae347be6f4dc835a467ffe"),
    (b"abc", "8eb208f7e05d987a9b044a8e98c6b087f15a0bfc"),
    (b"message digest", "5d0689ef49d2fae572b881b123a85ffa21595f36"),
    (b"abcdefghijklmnopqrstuvwxyz", "f71c27109c692c1b56bbdceb5b9d2865b3708dbc"),
    (b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq", "12a053384a9c0c88e405a06c27dcf49ada62eb2b"),
    (
        b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789",
        "b0e20b6e3116640286ed3a87a5713079b21f5189",
    ),
    (b"1234567890" * 8, "9b752e45573d4b39f4dbd3323cab82bf63326bfb"),
    (b"a" * 1_000_000, "52783243c1697bdbe16d37f97f68f08325dc1528"),
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    deviation: float

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite}:{self.name} deviation={self.deviation:.3g}"


def check_hash_vectors(include_long: bool = True) -> list[CheckResult]:
    out = []
    for msg, want in SHA256_VECTORS:
        if len(msg) > 1000 and not include_long:
            continue
        got = sha256_digest(msg).hex()
        out.append(CheckResult("sha256", f"len{len(msg)}", got == want, float(got != want)))
    for msg, want in RIPEMD160_VECTORS:
        if len(msg) > 1000 and not include_long:
            continue
        got = ripemd160_digest(msg).hex()
        out.append(CheckResult("ripemd160", f"len{len(msg)}", got == want, float(got != want)))
    header = bytes(80)
    got = double_sha256(header)
    want = hashlib.sha256(hashlib.sha256(header).digest()).digest()
    out.append(CheckResult("sha256", "double_header", got == want, float(got != want)))
    return out


def check_grover(max_bits: int = 12, tol: float = 1e-9) -> list[CheckResult]:
    import math

    out = []
    for n in range(1, max_bits + 1):
        size = 1 << n
        for count in sorted({1, 2, 4, size // 4, size // 2, size} - {0}):
            if count > size:
                continue
            theta = math.asin(math.sqrt(count / size))
            r_opt = max(1, round(math.pi / (4 * theta) - 0.5))
            sim, norms = grover_trace(MarkedSet.first(n, count), 2 * r_opt)
            worst = max(abs(sim[r] - closed_form_success(n, count, r)) for r in range(2 * r_opt + 1))
            worst_norm = float(abs(norms - 1.0).max())
            out.append(CheckResult("grover", f"n{n}_M{count}", worst <= tol and worst_norm <= 1e-12, worst))
    return out


def check_monte_carlo(seed: int = DEFAULT_SEED, bits=(4, 8, 16), samples: int = 1 << 20) -> list[CheckResult]:
    out = []
    for b in bits:
        est = monte_carlo_hit_rate(b, samples, seed)
        dev = est.sigma_deviation()
        out.append(CheckResult("monte_carlo", f"b{b}", dev <= 3.0, dev))
    return out


def run_all(seed: int = DEFAULT_SEED, mc_samples: int = 1 << 20) -> list[CheckResult]:
    return check_hash_vectors() + check_grover() + check_monte_carlo(seed, samples=mc_samples)


__all__ = [
    "CheckResult",
    "HitRateEstimate",
    "MarkedSet",
    "check_grover",
    "check_hash_vectors",
    "check_monte_carlo",
    "closed_form_success",
    "double_sha256",
    "grover_simulate",
    "grover_trace",
    "monte_carlo_hit_rate",
    "p2pkh_hash",
    "ripemd160_digest",
    "run_all",
    "sha256_digest",
]
