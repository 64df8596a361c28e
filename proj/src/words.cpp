#include "sturmian/words.hpp"

#include <stdexcept>
#include <utility>

#include "sturmian/errors.hpp"

namespace sturmian {

Word involution_eta(const Word& w) {
    Word out(w);
    for (char& ch : out) {
        if (ch == '0') ch = '1';
        else if (ch == '1') ch = '0';
        else throw std::invalid_argument("involution_eta: binary words only");
    }
    return out;
}

namespace {

// floor/remainder tracker for n * (p/q) as n steps by 1; needs p <= q.
struct SteppedMultiple {
    const Int p, q;
    Int floor_val = 0, rem = 0;

    void step() {
        rem += p;
        if (rem >= q) {
            rem -= q;
            ++floor_val;
        }
    }
    Int ceil_val() const { return rem > 0 ? floor_val + 1 : floor_val; }
};

} // namespace

Word mechanical_prefix(const ContinuedFraction& cf, std::size_t length, std::size_t budget) {
    if (length > budget)
        throw BudgetExceeded("mechanical_prefix: length " + std::to_string(length) +
                             " exceeds budget " + std::to_string(budget));
    Word out;
    if (length == 0) return out;
    out.reserve(length);

    ThetaEnclosure box = enclose_theta(cf, cf.depth() - 1);
    SteppedMultiple lo{box.lower.get_num(), box.lower.get_den()};
    SteppedMultiple hi{box.upper.get_num(), box.upper.get_den()};

    Int prev_c;
    for (std::size_t n = 1; n <= length + 1; ++n) {
        lo.step();
        hi.step();
        Int c_lo = lo.floor_val + 1; // ceil(theta*n) >= floor(lower*n) + 1
        Int c_hi = hi.ceil_val();    // ceil(theta*n) <= ceil(upper*n)
        if (c_lo != c_hi)
            throw EnclosureExhausted("mechanical_prefix: ceil(theta*" + std::to_string(n) +
                                     ") undecided; extend the expansion");
        if (n > 1) {
            Int diff = c_lo - prev_c;
            out.push_back(diff == 0 ? '0' : '1');
        }
        prev_c = std::move(c_lo);
    }
    return out;
}

namespace {

// Appends `times` copies of `part` to `dst`, stopping once dst reaches `cap`
// symbols. Safe for capped parts: a truncated copy fills dst to the cap, so
// no second (wrong) copy can follow it.
void append_capped(Word& dst, const Word& part, const Int& times, std::size_t cap) {
    if (part.empty()) return;
    for (Int done = 0; done < times && dst.size() < cap; ++done) {
        std::size_t room = cap - dst.size();
        if (part.size() <= room) dst += part;
        else dst.append(part, 0, room);
    }
}

struct LevelExponents {
    Int odd, even; // substitution powers feeding y then x at one level
};

LevelExponents exponents_at(const ContinuedFraction& cf, std::size_t k) {
    LevelExponents e;
    e.odd = cf.entries[2 * k - 2];
    if (k == 1) e.odd -= 1; // word tower consumes the reduced first entry
    e.even = cf.entries[2 * k - 1];
    return e;
}

} // namespace

std::vector<SubstitutionLevel> substitution_levels(const ContinuedFraction& cf,
                                                   std::size_t max_level, std::size_t budget) {
    require_normalized(cf);
    if (2 * max_level > cf.depth())
        throw InsufficientDepth("substitution_levels: level " + std::to_string(max_level) +
                                " needs " + std::to_string(2 * max_level) + " entries, have " +
                                std::to_string(cf.depth()));

    std::vector<SubstitutionLevel> out;
    out.reserve(max_level + 1);

    SubstitutionLevel cur;
    cur.level = 0;
    cur.x_len = 1;
    cur.y_len = 1;
    cur.x_prefix = "0";
    cur.y_prefix = "1";
    out.push_back(cur);

    for (std::size_t k = 1; k <= max_level; ++k) {
        LevelExponents e = exponents_at(cf, k);
        SubstitutionLevel next;
        next.level = k;
        next.y_len = cur.y_len + e.odd * cur.x_len;
        next.x_len = cur.x_len + e.even * next.y_len;

        if (cur.x_prefix && cur.y_prefix && next.y_len <= budget) {
            Word y = *cur.y_prefix;
            y.reserve(next.y_len.get_ui());
            append_capped(y, *cur.x_prefix, e.odd, next.y_len.get_ui());
            if (next.x_len <= budget) {
                Word x = *cur.x_prefix;
                x.reserve(next.x_len.get_ui());
                append_capped(x, y, e.even, next.x_len.get_ui());
                next.x_prefix = std::move(x);
            }
            next.y_prefix = std::move(y);
        }
        out.push_back(next);
        cur = std::move(next);
    }
    return out;
}

namespace {

Word limit_prefix(const ContinuedFraction& cf, std::size_t length, std::size_t budget,
                  LimitWord which) {
    require_normalized(cf);
    if (length > budget)
        throw BudgetExceeded("limit prefix: length " + std::to_string(length) +
                             " exceeds budget " + std::to_string(budget));
    if (length == 0) return {};

    Word x = "0", y = "1";
    Int x_len = 1, y_len = 1;
    const Int want(static_cast<unsigned long>(length));
    for (std::size_t k = 1;; ++k) {
        if (which == LimitWord::x && x_len >= want) return x;
        if (which == LimitWord::y && y_len >= want) return y;
        if (2 * k > cf.depth())
            throw InsufficientDepth("limit prefix: " + std::to_string(length) +
                                    " symbols need more than " + std::to_string(cf.depth()) +
                                    " entries");
        LevelExponents e = exponents_at(cf, k);
        y_len += e.odd * x_len;
        append_capped(y, x, e.odd, length);
        x_len += e.even * y_len;
        append_capped(x, y, e.even, length);
    }
}

} // namespace

Word x_prefix_of_length(const ContinuedFraction& cf, std::size_t length, std::size_t budget) {
    return limit_prefix(cf, length, budget, LimitWord::x);
}

Word y_prefix_of_length(const ContinuedFraction& cf, std::size_t length, std::size_t budget) {
    return limit_prefix(cf, length, budget, LimitWord::y);
}

FactorIndex::FactorIndex(Word text) : text_(std::move(text)) {
    st_.reserve(2 * text_.size() + 2);
    st_.push_back(State{});
    for (char ch : text_) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("FactorIndex: binary words only");
        extend(ch - '0');
    }
}

void FactorIndex::extend(int c) {
    const std::int32_t cur = static_cast<std::int32_t>(st_.size());
    st_.push_back(State{st_[last_].len + 1, -1, {-1, -1}});
    std::int32_t p = last_;
    while (p != -1 && st_[p].next[c] == -1) {
        st_[p].next[c] = cur;
        p = st_[p].link;
    }
    if (p == -1) {
        st_[cur].link = 0;
    } else {
        const std::int32_t q = st_[p].next[c];
        if (st_[p].len + 1 == st_[q].len) {
            st_[cur].link = q;
        } else {
            const std::int32_t clone = static_cast<std::int32_t>(st_.size());
            st_.push_back(State{st_[p].len + 1, st_[q].link, st_[q].next});
            while (p != -1 && st_[p].next[c] == q) {
                st_[p].next[c] = clone;
                p = st_[p].link;
            }
            st_[q].link = clone;
            st_[cur].link = clone;
        }
    }
    last_ = cur;
}

bool FactorIndex::contains(std::string_view w) const {
    std::int32_t s = 0;
    for (char ch : w) {
        if (ch != '0' && ch != '1') return false;
        s = st_[s].next[ch - '0'];
        if (s == -1) return false;
    }
    return true;
}

std::vector<std::pair<Word, std::array<bool, 2>>>
FactorIndex::factors_with_extensions(std::size_t n) const {
    std::vector<std::pair<Word, std::array<bool, 2>>> out;
    Word path;
    path.reserve(n);
    auto dfs = [&](auto&& self, std::int32_t s) -> void {
        if (path.size() == n) {
            out.emplace_back(path,
                             std::array<bool, 2>{st_[s].next[0] != -1, st_[s].next[1] != -1});
            return;
        }
        for (int c = 0; c < 2; ++c) {
            const std::int32_t t = st_[s].next[c];
            if (t != -1) {
                path.push_back(static_cast<char>('0' + c));
                self(self, t);
                path.pop_back();
            }
        }
    };
    dfs(dfs, 0);
    return out;
}

std::vector<Word> FactorIndex::factors(std::size_t n) const {
    std::vector<Word> out;
    for (auto& [w, ext] : factors_with_extensions(n)) out.push_back(std::move(w));
    return out;
}

std::size_t FactorIndex::count_distinct(std::size_t n) const {
    return factors_with_extensions(n).size();
}

std::vector<std::vector<std::size_t>> FactorIndex::occurrence_starts(std::size_t n) const {
    std::vector<std::vector<std::size_t>> groups;
    if (n == 0 || n > text_.size()) return groups;
    std::vector<std::int32_t> id(st_.size(), -1);
    std::int32_t cur = 0;
    std::size_t curlen = 0;
    for (std::size_t i = 0; i < text_.size(); ++i) {
        cur = st_[cur].next[text_[i] - '0'];
        ++curlen;
        if (curlen > n) {
            while (st_[cur].link != -1 && st_[st_[cur].link].len >= static_cast<std::int32_t>(n))
                cur = st_[cur].link;
            curlen = n;
        }
        if (curlen == n) {
            if (id[cur] == -1) {
                id[cur] = static_cast<std::int32_t>(groups.size());
                groups.emplace_back();
            }
            groups[id[cur]].push_back(i + 1 - n);
        }
    }
    return groups;
}

std::vector<bool> FactorIndex::prefix_branching(const Word& word, std::size_t N) const {
    if (word.size() < N)
        throw std::invalid_argument("prefix_branching: word has " + std::to_string(word.size()) +
                                    " symbols, need " + std::to_string(N));
    std::vector<bool> out;
    out.reserve(N);
    std::int32_t s = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (word[i] != '0' && word[i] != '1')
            throw std::invalid_argument("prefix_branching: binary words only");
        s = st_[s].next[word[i] - '0'];
        if (s == -1)
            throw IncompleteSlice("prefix_branching: prefix of length " + std::to_string(i + 1) +
                                  " does not occur in the indexed text");
        out.push_back(st_[s].next[0] != -1 && st_[s].next[1] != -1);
    }
    return out;
}

LanguageSlice language_slice(const FactorIndex& idx, std::size_t n, Completeness claimed) {
    if (n == 0) throw std::invalid_argument("language_slice: n must be >= 1");
    LanguageSlice s;
    s.n = n;
    s.completeness = claimed;
    for (auto& [w, ext] : idx.factors_with_extensions(n)) {
        if (ext[0] && ext[1]) s.right_special.push_back(w);
        s.factors.push_back(std::move(w));
    }
    if (claimed == Completeness::Certified) {
        if (s.factors.size() > n + 1)
            throw DataIntegrityError("language_slice: " + std::to_string(s.factors.size()) +
                                     " factors of length " + std::to_string(n) +
                                     "; text is not Sturmian");
        if (s.factors.size() < n + 1)
            throw IncompleteSlice("language_slice: only " + std::to_string(s.factors.size()) +
                                  " of " + std::to_string(n + 1) + " factors present");
        if (s.right_special.size() != 1)
            throw IncompleteSlice("language_slice: expected one right-special factor, found " +
                                  std::to_string(s.right_special.size()));
    }
    return s;
}

std::vector<bool> branching_profile_bruteforce(const FactorIndex& language, const Word& word,
                                               std::size_t N) {
    return language.prefix_branching(word, N);
}

std::vector<bool> branching_profile_bruteforce(const Word& text, std::size_t N) {
    FactorIndex idx(text);
    return idx.prefix_branching(idx.text(), N);
}

std::vector<bool> branching_profile_closed(const ContinuedFraction& cf, std::size_t N,
                                           LimitWord source) {
    require_normalized(cf);
    std::vector<bool> out(N, false);
    if (N == 0) return out;
    const ConvergentTable t = convergents(cf);
    const Int bound(static_cast<unsigned long>(N));

    // Batches of hit positions j*step + start, k = 1, 2, ...; a batch exists
    // exactly when its smallest member (j = 0) is within range.
    for (std::size_t k = 1;; ++k) {
        const std::size_t start_idx = (source == LimitWord::x) ? 2 * k - 2 : 2 * k - 1;
        const std::size_t step_idx = start_idx + 1;
        const std::size_t count_entry = (source == LimitWord::x) ? 2 * k : 2 * k + 1;
        if (start_idx > t.max_index())
            throw InsufficientDepth("branching_profile_closed: ran out of entries before the "
                                    "batches outgrew N");
        if (t.q[start_idx] > bound) break;
        if (count_entry > cf.depth() || step_idx > t.max_index())
            throw InsufficientDepth("branching_profile_closed: batch " + std::to_string(k) +
                                    " needs entry " + std::to_string(count_entry));
        const Int& step = t.q[step_idx];
        const Int& reps = cf.entries[count_entry - 1];
        for (Int j = 0; j < reps; ++j) {
            Int n = j * step + t.q[start_idx];
            if (n > bound) break;
            out[n.get_ui() - 1] = true;
        }
    }
    return out;
}

} // namespace sturmian
