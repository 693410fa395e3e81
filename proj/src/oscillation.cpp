#include "qramsey/oscillation.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

namespace qramsey {

Step dispatch(const StepFacts& f) {
    if (f.equal) return {1, Reduce::Done, 0};

    int matches = 0;
    Step step;
    auto take = [&](bool applies, int rule, Reduce reduce, unsigned add) {
        if (!applies) return;
        ++matches;
        step = {rule, reduce, add};
    };

    if (f.lt > 0) {
        take(f.lz < f.ltm || (f.lz == f.ltm && f.perp_z_tm), 2, Reduce::T, 0);
        take((f.ltm < f.lz && f.lz < f.lt) || (f.lz == f.ltm && !f.perp_z_tm), 3, Reduce::T, 1);
    }
    if (f.lz > 0) {
        take(f.lt < f.lzm || (f.lt == f.lzm && f.perp_t_zm), 4, Reduce::Z, 0);
        take((f.lzm < f.lt && f.lt < f.lz) || (f.lt == f.lzm && !f.perp_t_zm), 5, Reduce::Z, 1);
    }
    if (f.lz > 0 && f.lz == f.lt) {
        int c = f.cmp_zm_tm;
        take((f.lzm < f.ltm && c > 0) || (f.ltm < f.lzm && c < 0), 6, Reduce::Both, 1);
        take((f.lzm < f.ltm && c < 0) || (f.ltm < f.lzm && c > 0) || (f.lzm == f.ltm && c != 0), 7,
             Reduce::Both, 2);
    }
    if (matches != 1) {
        throw DefectError("invariant_i: " + std::to_string(matches) +
                          " cases apply at lengths (" + std::to_string(f.lz) + "," +
                          std::to_string(f.lt) + ")");
    }
    return step;
}

namespace {

// Length of the longest proper Q-prefix of w|a, for every a in 1..|w|.
std::vector<std::size_t> predecessor_lengths(const Word& w) {
    std::vector<std::size_t> pred(w.size() + 1, 0);
    std::size_t last = 0;
    for (std::size_t a = 1; a <= w.size(); ++a) {
        pred[a] = last;
        if (w[a - 1] == 1) last = a;
    }
    return pred;
}

}  // namespace

std::size_t invariant_i_trace(const QWord& zq, const QWord& tq, std::vector<int>* rules) {
    // Every pair on the chain is a pair of prefixes of (z, t), so it is named
    // by two lengths; all comparisons reduce to the first mismatch of z and t.
    const Word& z = zq.word();
    const Word& t = tq.word();
    const auto pz = predecessor_lengths(z);
    const auto pt = predecessor_lengths(t);
    const std::size_t common = std::min(z.size(), t.size());
    std::size_t d = 0;
    while (d < common && z[d] == t[d]) ++d;

    auto perp = [&](const Word& x, std::size_t p, const Word& y, std::size_t q) {
        return d < std::min(p, q) && x[d] < y[d];
    };
    auto cmp = [&](std::size_t p, std::size_t q) {
        if (d < std::min(p, q)) return z[d] < t[d] ? -1 : 1;
        return p < q ? -1 : (p > q ? 1 : 0);
    };

    std::size_t a = z.size(), b = t.size(), total = 0;
    for (;;) {
        StepFacts f;
        f.lz = a;
        f.lt = b;
        f.lzm = a > 0 ? pz[a] : 0;
        f.ltm = b > 0 ? pt[b] : 0;
        f.equal = a == b && d >= a;
        if (!f.equal) {
            if (b > 0) f.perp_z_tm = perp(z, a, t, f.ltm);
            if (a > 0) f.perp_t_zm = perp(t, b, z, f.lzm);
            if (a > 0 && b > 0) f.cmp_zm_tm = cmp(f.lzm, f.ltm);
        }
        Step s = dispatch(f);
        if (rules) rules->push_back(s.rule);
        total += s.add;
        switch (s.reduce) {
            case Reduce::Done:
                return total;
            case Reduce::T:
                b = f.ltm;
                break;
            case Reduce::Z:
                a = f.lzm;
                break;
            case Reduce::Both:
                a = f.lzm;
                b = f.ltm;
                break;
        }
    }
}

std::size_t invariant_i(const QWord& z, const QWord& t) {
    return invariant_i_trace(z, t, nullptr);
}

namespace {

// A word of length <= 32 packed most-significant-bit first.
struct Packed {
    std::uint32_t v = 0;
    std::size_t len = 0;
};

Packed packed_of_id(std::size_t id) {
    if (id == 0) return {};
    std::size_t l = std::bit_width(id) - 1;
    return {static_cast<std::uint32_t>(((id - (std::size_t{1} << l)) << 1) | 1u), l + 1};
}

std::size_t id_of_packed(Packed p) {
    if (p.len == 0) return 0;
    return (std::size_t{1} << (p.len - 1)) + (p.v >> 1);
}

Packed packed_pred(Packed p) {
    std::uint32_t w = p.v >> 1;
    if (w == 0) return {};
    int tz = std::countr_zero(w);
    return {w >> tz, p.len - 1 - static_cast<std::size_t>(tz)};
}

// Sign of the comparison of the common-length prefixes, then of the lengths.
int packed_cmp(Packed x, Packed y, bool by_length) {
    std::size_t m = std::min(x.len, y.len);
    std::uint32_t xm = m == 0 ? 0 : x.v >> (x.len - m);
    std::uint32_t ym = m == 0 ? 0 : y.v >> (y.len - m);
    if (xm != ym) return xm < ym ? -1 : 1;
    if (!by_length) return 0;
    return x.len < y.len ? -1 : (x.len > y.len ? 1 : 0);
}

}  // namespace

InvariantTable::InvariantTable(std::size_t max_len) : max_len_(max_len), count_(std::size_t{1} << max_len) {
    if (max_len > 13) throw DomainError("InvariantTable: max_len above 13");
    values_.assign(count_ * count_, 0);
    for (std::size_t zid = 0; zid < count_; ++zid) {
        const Packed z = packed_of_id(zid);
        const Packed zm = z.len > 0 ? packed_pred(z) : Packed{};
        for (std::size_t tid = 0; tid < count_; ++tid) {
            const Packed t = packed_of_id(tid);
            const Packed tm = t.len > 0 ? packed_pred(t) : Packed{};
            StepFacts f;
            f.lz = z.len;
            f.lt = t.len;
            f.lzm = zm.len;
            f.ltm = tm.len;
            f.equal = zid == tid;
            if (!f.equal) {
                if (t.len > 0) f.perp_z_tm = packed_cmp(z, tm, false) < 0;
                if (z.len > 0) f.perp_t_zm = packed_cmp(t, zm, false) < 0;
                if (z.len > 0 && t.len > 0) f.cmp_zm_tm = packed_cmp(zm, tm, true);
            }
            Step s = dispatch(f);
            std::size_t next = 0;
            switch (s.reduce) {
                case Reduce::Done:
                    break;
                case Reduce::T:
                    next = at(zid, id_of_packed(tm));
                    break;
                case Reduce::Z:
                    next = at(id_of_packed(zm), tid);
                    break;
                case Reduce::Both:
                    next = at(id_of_packed(zm), id_of_packed(tm));
                    break;
            }
            values_[zid * count_ + tid] = static_cast<std::uint8_t>(next + s.add);
        }
    }
}

std::size_t InvariantTable::at(const QWord& z, const QWord& t) const {
    if (z.size() > max_len_ || t.size() > max_len_) {
        throw DomainError("InvariantTable: word longer than table range");
    }
    return at(static_cast<std::size_t>(alpha_index(z)), static_cast<std::size_t>(alpha_index(t)));
}

QWord InvariantTable::word_of(std::size_t id) {
    Packed p = packed_of_id(id);
    std::string bits(p.len, '0');
    for (std::size_t i = 0; i < p.len; ++i) {
        if ((p.v >> (p.len - 1 - i)) & 1u) bits[i] = '1';
    }
    return QWord(Word::parse(bits));
}

std::size_t InvariantMemo::get(const QWord& z, const QWord& t) {
    std::string key = z.word().bits() + '|' + t.word().bits();
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    std::size_t value = invariant_i(z, t);
    std::unique_lock lock(mutex_);
    cache_.emplace(std::move(key), value);
    return value;
}

std::size_t InvariantMemo::size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

std::size_t osc(const Word& z, const Word& t) {
    std::size_t n = std::max(z.size(), t.size());
    std::size_t runs = 0;
    int side = -1;
    for (std::size_t i = 0; i < n; ++i) {
        int zb = i < z.size() ? z[i] : 0;
        int tb = i < t.size() ? t[i] : 0;
        if (zb == tb) continue;
        if (zb != side) {
            ++runs;
            side = zb;
        }
    }
    return runs;
}

std::vector<QWord> q_words_upto(std::size_t depth) {
    std::vector<QWord> out{QWord()};
    for (std::size_t id = 1; id < (std::size_t{1} << depth); ++id) {
        out.push_back(InvariantTable::word_of(id));
    }
    return out;
}

SuffVerdict suff_check(const SuffAssignment& a) {
    const auto domain = q_words_upto(a.depth);
    if (a.table.size() != domain.size()) {
        throw PreconditionError("domain", "table does not cover exactly the Q-words of length <= " +
                                              std::to_string(a.depth));
    }
    std::vector<const QWord*> image;
    for (const auto& q : domain) {
        auto it = a.table.find(q);
        if (it == a.table.end()) {
            throw PreconditionError("domain", "missing entry for " + q.str());
        }
        image.push_back(&it->second);
    }
    // domain is length-lex sorted, so (a) reduces to consecutive entries.
    for (std::size_t k = 1; k < domain.size(); ++k) {
        if (image[k - 1]->size() >= image[k]->size()) {
            throw PreconditionError("a", "|s_" + domain[k - 1].str() + "| >= |s_" + domain[k].str() + "|");
        }
    }
    for (const auto& [t, st] : a.table) {
        if (t.size() >= a.depth) continue;
        Word t1 = t.word();
        t1.push_back(1);
        const QWord& st1 = a.table.at(QWord(t1));
        if (!(st.word().is_prefix_of(st1.word()) && st.size() < st1.size())) {
            throw PreconditionError("b", "s_" + t.str() + " is not a proper prefix of s_" + t1.str());
        }
    }

    SuffVerdict v;
    for (std::size_t x = 0; x < domain.size(); ++x) {
        for (std::size_t y = 0; y < domain.size(); ++y) {
            ++v.pairs_checked;
            std::size_t lhs = invariant_i(domain[x], domain[y]);
            std::size_t rhs = invariant_i(*image[x], *image[y]);
            if (lhs != rhs) {
                v.pass = false;
                v.counterexample = std::make_pair(domain[x], domain[y]);
                v.expected = lhs;
                v.actual = rhs;
                return v;
            }
        }
    }
    return v;
}

}  // namespace qramsey
