#include "treelab/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace treelab {

namespace {

void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    auto it = std::unique(v.begin(), v.end());
    if (it != v.end()) throw std::logic_error("generator emitted duplicates");
}

// Forest encodings with n edges: trees are "(" + forest + ")" concatenations.
const std::vector<std::string>& plane_forests(int n) {
    static std::vector<std::vector<std::string>> memo = {{""}};
    while ((int)memo.size() <= n) {
        int k = (int)memo.size();
        std::vector<std::string> out;
        for (int j = 1; j <= k; ++j)
            for (const auto& first : memo[j - 1])
                for (const auto& rest : memo[k - j])
                    out.push_back("(" + first + ")" + rest);
        memo.push_back(std::move(out));
    }
    return memo[n];
}

const std::vector<std::string>& binary_memo(int n) {
    static std::vector<std::vector<std::string>> memo = {{"_"}};
    while ((int)memo.size() <= n) {
        int k = (int)memo.size();
        std::vector<std::string> out;
        for (int i = 0; i < k; ++i)
            for (const auto& l : memo[i])
                for (const auto& r : memo[k - 1 - i])
                    out.push_back("(" + l + " " + r + ")");
        memo.push_back(std::move(out));
    }
    return memo[n];
}

void gen_dyck(std::string& cur, int easts, int norths, int n,
              std::vector<std::string>& out) {
    if (easts == n && norths == n) { out.push_back(cur); return; }
    if (easts < n) {
        cur.push_back('E');
        gen_dyck(cur, easts + 1, norths, n, out);
        cur.pop_back();
    }
    if (norths < easts) {
        cur.push_back('N');
        gen_dyck(cur, easts, norths + 1, n, out);
        cur.pop_back();
    }
}

// All 132-avoiders of {1..m}: w = A max B with A on the high values, B on the
// low values, both avoiding.
std::vector<std::vector<int>> avoid132_words(int m) {
    if (m == 0) return {{}};
    static std::vector<std::vector<std::vector<int>>> memo = {{{}}};
    if ((int)memo.size() > m) return memo[m];
    while ((int)memo.size() <= m) {
        int k = (int)memo.size();
        std::vector<std::vector<int>> out;
        for (int low = 0; low <= k - 1; ++low) {
            for (const auto& a : memo[k - 1 - low])
                for (const auto& b : memo[low]) {
                    std::vector<int> w;
                    w.reserve(k);
                    for (int x : a) w.push_back(x + low);
                    w.push_back(k);
                    for (int x : b) w.push_back(x);
                    out.push_back(std::move(w));
                }
        }
        memo.push_back(std::move(out));
    }
    return memo[m];
}

void disk_decorate(const BinaryTree& shape, int v, std::vector<Label>& signs,
                   std::vector<std::string>& out) {
    if (v == shape.node_count()) {
        BinaryTree d = shape;
        d.labels = signs;
        d.label_kind = LabelKind::sign;
        out.push_back(print_binary(d));
        return;
    }
    int p = shape.parent[v];
    if (p != -1 && shape.right[p] == v) {
        signs[v] = -signs[p];  // right chain condition forces the opposite sign
        disk_decorate(shape, v + 1, signs, out);
    } else {
        for (Label s : {Label(-1), Label(1)}) {
            signs[v] = s;
            disk_decorate(shape, v + 1, signs, out);
        }
    }
}

// Weakly increasing forests on the exact multiset S (as sorted value/count
// pairs), first-child root label >= lo. Returned as encoding fragments: a
// forest is a list of (subtree-paren-string, preorder-label-list) pairs glued
// by the caller.
struct WitPiece {
    std::string parens;
    std::vector<Label> labels;
};

using ValueCounts = std::vector<std::pair<Label, int>>;

std::vector<WitPiece> wit_forests(const ValueCounts& s, Label lo);

std::vector<WitPiece> wit_trees_rooted(Label root_label, const ValueCounts& s) {
    std::vector<WitPiece> out;
    for (const auto& f : wit_forests(s, root_label)) {
        WitPiece p;
        p.parens = "(" + f.parens + ")";
        p.labels.push_back(root_label);
        p.labels.insert(p.labels.end(), f.labels.begin(), f.labels.end());
        out.push_back(std::move(p));
    }
    return out;
}

// Enumerates submultisets of s; calls fn(chosen, rest).
template <typename F>
void split_multiset(const ValueCounts& s, F&& fn) {
    ValueCounts chosen, rest;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == s.size()) { fn(chosen, rest); return; }
        auto [v, c] = s[i];
        for (int take = 0; take <= c; ++take) {
            if (take > 0) chosen.push_back({v, take});
            if (take < c) rest.push_back({v, c - take});
            rec(i + 1);
            if (take > 0) chosen.pop_back();
            if (take < c) rest.pop_back();
        }
    };
    rec(0);
}

std::vector<WitPiece> wit_forests(const ValueCounts& s, Label lo) {
    if (s.empty()) return {{"", {}}};
    std::vector<WitPiece> out;
    // Pick the first child's label c >= lo and its descendant multiset, then
    // recurse on the remaining forest with floor c; every forest decomposes
    // this way exactly once.
    for (size_t i = 0; i < s.size(); ++i) {
        Label c = s[i].first;
        if (c < lo) continue;
        ValueCounts without = s;
        if (--without[i].second == 0) without.erase(without.begin() + i);
        split_multiset(without, [&](const ValueCounts& desc, const ValueCounts& rest) {
            if (!desc.empty() && desc.front().first < c) return;  // subtree labels >= c
            for (const auto& first : wit_trees_rooted(c, desc))
                for (const auto& tail : wit_forests(rest, c)) {
                    WitPiece p;
                    p.parens = first.parens + tail.parens;
                    p.labels = first.labels;
                    p.labels.insert(p.labels.end(), tail.labels.begin(), tail.labels.end());
                    out.push_back(std::move(p));
                }
        });
    }
    return out;
}

std::vector<std::string> witb_subtrees(const ValueCounts& s, Label lo) {
    if (s.empty()) return {"_"};
    std::vector<std::string> out;
    for (size_t i = 0; i < s.size(); ++i) {
        Label r = s[i].first;
        if (r < lo) continue;
        ValueCounts without = s;
        if (--without[i].second == 0) without.erase(without.begin() + i);
        split_multiset(without, [&](const ValueCounts& lpart, const ValueCounts& rpart) {
            for (const auto& l : witb_subtrees(lpart, r))
                for (const auto& rr : witb_subtrees(rpart, r))
                    out.push_back("(" + l + " " + std::to_string(r) + " " + rr + ")");
        });
    }
    return out;
}

ValueCounts to_value_counts(const Multiset& m) {
    ValueCounts s;
    for (auto& [v, c] : m.count) s.push_back({v, c});
    return s;
}

}  // namespace

std::vector<std::string> plane_encodings(int n) {
    if (n < 1) throw std::invalid_argument("plane_encodings: n must be >= 1");
    std::vector<std::string> out = plane_forests(n);
    sort_unique(out);
    return out;
}

std::vector<std::string> binary_encodings(int n) {
    if (n < 1) throw std::invalid_argument("binary_encodings: n must be >= 1");
    std::vector<std::string> out = binary_memo(n);
    sort_unique(out);
    return out;
}

std::vector<std::string> dyck_encodings(int n) {
    if (n < 1) throw std::invalid_argument("dyck_encodings: n must be >= 1");
    std::vector<std::string> out;
    std::string cur;
    gen_dyck(cur, 0, 0, n, out);
    return out;  // emitted in lexicographic order already (E < N)
}

std::vector<std::string> avoid132_encodings(int n) {
    if (n < 1) throw std::invalid_argument("avoid132_encodings: n must be >= 1");
    std::vector<std::string> out;
    for (const auto& w : avoid132_words(n)) out.push_back(print_permutation({w}));
    sort_unique(out);
    return out;
}

std::vector<std::string> disk_encodings(int n) {
    if (n < 1) throw std::invalid_argument("disk_encodings: n must be >= 1");
    std::vector<std::string> out;
    for (const auto& enc : binary_encodings(n)) {
        BinaryTree shape = parse_binary(enc);
        std::vector<Label> signs(n, 0);
        disk_decorate(shape, 0, signs, out);
    }
    sort_unique(out);
    return out;
}

std::vector<std::string> labeled_tree_encodings(int n) {
    if (n < 1) throw std::invalid_argument("labeled_tree_encodings: n must be >= 1");
    // A rooted labeled tree is determined by an acyclic parent function
    // [n] -> {0..n}: children order is forced by the increasing-label rule.
    std::vector<std::string> out;
    std::vector<int> par(n + 1, 0);
    std::vector<int> state(n + 1, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            // acyclicity check with path marking
            std::vector<int> mark(n + 1, 0);
            for (int x = 1; x <= n; ++x) {
                int w = x;
                std::vector<int> path;
                while (w != 0 && mark[w] == 0) { mark[w] = 1; path.push_back(w); w = par[w]; }
                if (w != 0 && mark[w] == 1) return;  // ran into the current path: cycle
                for (int y : path) mark[y] = 2;
            }
            std::vector<std::vector<int>> kids(n + 1);
            for (int x = 1; x <= n; ++x) kids[par[x]].push_back(x);
            std::vector<Label> labels(n + 1);
            for (int x = 0; x <= n; ++x) labels[x] = x;
            out.push_back(print_plane(PlaneTree::from_adjacency(0, kids, labels).first));
            return;
        }
        for (int p = 0; p <= n; ++p) {
            if (p == v) continue;
            par[v] = p;
            rec(v + 1);
        }
    };
    rec(1);
    sort_unique(out);
    return out;
}

std::vector<std::string> rb_encodings(int n) {
    if (n < 1) throw std::invalid_argument("rb_encodings: n must be >= 1");
    if (n > 20) throw std::invalid_argument("rb_encodings: n too large");
    // Recursive over label bitmasks; right-subtree roots must exceed the parent.
    std::function<std::vector<std::string>(unsigned, int)> rec =
        [&](unsigned mask, int floor_label) -> std::vector<std::string> {
        if (mask == 0) return {"_"};
        std::vector<std::string> out;
        for (int r = floor_label + 1; r <= n; ++r) {
            if (!(mask >> (r - 1) & 1u)) continue;
            unsigned rest = mask & ~(1u << (r - 1));
            // left submask: any subset of rest
            for (unsigned lm = rest;; lm = (lm - 1) & rest) {
                for (const auto& l : rec(lm, 0))
                    for (const auto& rr : rec(rest & ~lm, r))
                        out.push_back("(" + l + " " + std::to_string(r) + " " + rr + ")");
                if (lm == 0) break;
            }
        }
        return out;
    };
    std::vector<std::string> out = rec((1u << n) - 1, 0);
    sort_unique(out);
    return out;
}

std::vector<std::string> wit_encodings(const Multiset& m) {
    if (m.empty()) throw std::invalid_argument("wit_encodings: empty multiset");
    std::vector<std::string> out;
    for (const auto& f : wit_forests(to_value_counts(m), 0)) {
        std::string enc = f.parens + "[0";
        for (Label l : f.labels) enc += "," + std::to_string(l);
        out.push_back(enc + "]");
    }
    sort_unique(out);
    return out;
}

std::vector<std::string> witb_encodings(const Multiset& m) {
    if (m.empty()) throw std::invalid_argument("witb_encodings: empty multiset");
    std::vector<std::string> out = witb_subtrees(to_value_counts(m), 0);
    sort_unique(out);
    return out;
}

std::vector<std::string> generate(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (f == "wit" || f == "witb") {
        if (spec.m.empty()) throw std::invalid_argument("generate: family needs --multiset");
        if (spec.n > 0) throw std::invalid_argument("generate: family takes a multiset, not a size");
        return f == "wit" ? wit_encodings(spec.m) : witb_encodings(spec.m);
    }
    if (!spec.m.empty()) throw std::invalid_argument("generate: family takes a size, not a multiset");
    if (spec.n < 1) throw std::invalid_argument("generate: family needs --n >= 1");
    if (f == "plane") return plane_encodings(spec.n);
    if (f == "binary") return binary_encodings(spec.n);
    if (f == "dyck") return dyck_encodings(spec.n);
    if (f == "avoid132") return avoid132_encodings(spec.n);
    if (f == "disk") return disk_encodings(spec.n);
    if (f == "labeled") return labeled_tree_encodings(spec.n);
    if (f == "rb") return rb_encodings(spec.n);
    throw std::invalid_argument("generate: unknown family '" + f + "'");
}

// --- counting ----------------------------------------------------------------

namespace {
const Count kCountMax = (~(unsigned __int128)0) >> 2;  // headroom for signed 128
}

std::string count_to_string(Count c) {
    if (c == 0) return "0";
    bool neg = c < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)c : (unsigned __int128)c;
    std::string s;
    while (u) { s += char('0' + (int)(u % 10)); u /= 10; }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

Count checked_add(Count a, Count b) {
    if (a > kCountMax - b) throw std::overflow_error("count overflow");
    return a + b;
}

Count checked_mul(Count a, Count b) {
    if (a != 0 && b > kCountMax / a) throw std::overflow_error("count overflow");
    return a * b;
}

Count binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Count r = 1;
    for (long long i = 1; i <= b; ++i) {
        r = checked_mul(r, a - b + i);
        r /= i;  // exact at every step
    }
    return r;
}

Count catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    return binomial(2LL * n, n) / (n + 1);
}

Count catalan_triangle(int n, int k) {
    if (k < 1 || k > n) throw std::out_of_range("catalan_triangle: need 1 <= k <= n");
    Count b = binomial(2LL * n - k, n);
    Count num = checked_mul(b, k);
    if (num % (2LL * n - k) != 0) throw std::logic_error("catalan_triangle: not integral");
    return num / (2LL * n - k);
}

Count alpha(const std::vector<int>& profile) {
    if (profile.empty()) throw std::invalid_argument("alpha: empty profile");
    for (int j : profile)
        if (j < 1) throw std::invalid_argument("alpha: level counts must be >= 1");
    Count r = 1;
    for (size_t i = 0; i + 1 < profile.size(); ++i)
        r = checked_mul(r, binomial(profile[i] + profile[i + 1] - 1, profile[i] - 1));
    return r;
}

namespace {
Count ipow(Count base, int e) {
    Count r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}
}  // namespace

std::vector<Count> tnk(int n) {
    if (n < 1) throw std::invalid_argument("tnk: n must be >= 1");
    // T_{n,k} = sum over compositions (m_1..m_k) of n of
    //   n!/(prod m_i!) * prod (m_i - 1)^(m_i - 1), with 0^0 = 1.
    std::vector<Count> a(n + 1, 0);
    for (int m = 1; m <= n; ++m) a[m] = ipow(m - 1, m - 1);
    // g[k][j] = contribution of k-part compositions of j with the multinomial
    // weight folded in via binomials.
    std::vector<std::vector<Count>> g(n + 1, std::vector<Count>(n + 1, 0));
    g[0][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = k; j <= n; ++j)
            for (int m = 1; m <= j - k + 1; ++m)
                g[k][j] = checked_add(
                    g[k][j],
                    checked_mul(checked_mul(binomial(j, m), a[m]), g[k - 1][j - m]));
    std::vector<Count> out(n + 1, 0);
    for (int k = 1; k <= n; ++k) out[k] = g[k][n];
    return out;
}

Count cayley_count(int n) {
    if (n < 1) throw std::invalid_argument("cayley_count: n must be >= 1");
    return ipow(n + 1, n - 1);
}

}  // namespace treelab
