#include "fusion/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>

namespace fusion {
namespace {

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

CatalogEntry build_entry(const RawCatalogEntry& raw) {
    const int r = raw.rank;
    std::string blob = std::to_string(r) + "|" + raw.dual + "|" + raw.coeffs;
    if (fnv64(blob) != raw.checksum)
        throw std::runtime_error("catalog integrity error in entry " + raw.id);
    std::vector<int> dual(r);
    for (int i = 0; i < r; ++i) dual[i] = raw.dual[i] - '0';
    std::vector<std::uint8_t> coef((size_t)r * r * r);
    // embedded digits are N[i][j][k] in the published row=j, column=k layout,
    // which matches our tensor layout directly
    for (size_t t = 0; t < coef.size(); ++t) coef[t] = (std::uint8_t)(raw.coeffs[t] - '0');
    CatalogEntry e;
    e.id = raw.id;
    e.ring = FusionRing(r, std::move(dual), std::move(coef), raw.id);
    e.fpdim_display = raw.fpdim_display;
    e.fpdim = raw.fpdim;
    e.type_vector = raw.type_vector;
    e.codegrees = raw.codegrees;
    e.starred = raw.starred;
    e.commutative = raw.commutative;
    e.annotations = raw.annotations;
    e.witness = raw.witness;
    e.model = raw.model;
    e.model_conjectural = raw.conjectural;
    e.properties = raw.properties;
    return e;
}

std::string normalize(const std::string& s) {
    std::string out;
    for (char c : s)
        if (std::isalnum((unsigned char)c)) out.push_back((char)std::tolower((unsigned char)c));
        else if (c == '+') out.push_back('p');
    return out;
}

} // namespace

const std::vector<CatalogEntry>& load_catalog() {
    static std::vector<CatalogEntry> entries;
    static std::once_flag once;
    std::call_once(once, [] {
        for (const auto& raw : raw_catalog_entries())
            entries.push_back(build_entry(raw));
    });
    return entries;
}

namespace {

std::vector<std::string> model_tokens(const CatalogEntry& e) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : e.model + ",") {
        if (c == ',') {
            std::string n = normalize(cur);
            if (!n.empty()) toks.push_back(n);
            cur.clear();
        } else cur.push_back(c);
    }
    return toks;
}

} // namespace

const CatalogEntry* lookup_opt(const std::string& key) {
    const auto& cat = load_catalog();
    for (const auto& e : cat)
        if (e.id == key) return &e;
    std::string nk = normalize(key);
    if (nk.empty()) return nullptr;
    // exact match on a model name
    for (const auto& e : cat)
        for (const auto& tok : model_tokens(e))
            if (tok == nk) return &e;
    // substring search; "r{rank}-" prefixes restrict the rank first
    auto search = [&](const std::string& needle, int rank_filter) -> const CatalogEntry* {
        std::vector<const CatalogEntry*> hits;
        for (const auto& e : cat) {
            if (rank_filter > 0 && e.ring.rank() != rank_filter) continue;
            std::string hay = normalize(e.model + " " + e.properties);
            if (hay.find(needle) != std::string::npos) hits.push_back(&e);
        }
        if (hits.size() == 1) return hits[0];
        if (hits.size() > 1) {
            std::vector<const CatalogEntry*> m2;
            for (auto* e : hits)
                if (normalize(e->model).find(needle) != std::string::npos) m2.push_back(e);
            if (m2.size() == 1) return m2[0];
            return hits.front();
        }
        return nullptr;
    };
    for (int r = 1; r <= 7; ++r) {
        std::string pre = "r" + std::to_string(r);
        if (nk.size() > pre.size() && nk.compare(0, pre.size(), pre) == 0) {
            if (const CatalogEntry* e = search(nk.substr(pre.size()), r)) return e;
        }
    }
    return search(nk, 0);
}

const CatalogEntry& lookup(const std::string& key) {
    const CatalogEntry* e = lookup_opt(key);
    if (!e) throw std::out_of_range("catalog: no entry matches '" + key + "'");
    return *e;
}

namespace {

// shared constructor for the SO(2n+1)_2 shape; extra_mult adds
// extra_mult*(x_1+x_2) to the x-products (the two question-mark families)
FusionRing metaplectic_impl(int n, bool twisted, int extra_mult) {
    if (n < 0) throw std::invalid_argument("metaplectic: n must be >= 0");
    const int N = 2 * n + 1;
    const int r = n + 4;
    // basis: 0 = unit, 1 = z, 2..n+1 = y_1..y_n, n+2 = x_1, n+3 = x_2
    auto y = [&](int i) { return 1 + i; };
    const int x1 = n + 2, x2 = n + 3;
    std::vector<int> mult((size_t)r * r * r, 0);
    auto add = [&](int a, int b, int c, int v = 1) {
        mult[(size_t)(a * r + b) * r + c] += v;
    };
    for (int j = 0; j < r; ++j) { add(0, j, j); if (j) add(j, 0, j); }
    add(1, 1, 0);
    for (int i = 1; i <= n; ++i) { add(1, y(i), y(i)); add(y(i), 1, y(i)); }
    add(1, x1, x2); add(1, x2, x1);
    add(x1, 1, x2); add(x2, 1, x1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                add(y(i), y(i), 0);
                add(y(i), y(i), 1);
                add(y(i), y(i), y(std::min(2 * i, N - 2 * i)));
            } else {
                add(y(i), y(j), y(std::min(i + j, N - i - j)));
                add(y(i), y(j), y(std::abs(i - j)));
            }
        }
    int id_obj = twisted ? 1 : 0;
    int z_obj = twisted ? 0 : 1;
    add(x1, x1, id_obj);
    add(x2, x2, id_obj);
    add(x1, x2, z_obj);
    add(x2, x1, z_obj);
    for (int i = 1; i <= n; ++i) {
        add(x1, x1, y(i));
        add(x2, x2, y(i));
        add(x1, x2, y(i));
        add(x2, x1, y(i));
    }
    if (extra_mult > 0)
        for (int xa : {x1, x2})
            for (int xb : {x1, x2}) {
                add(xa, xb, x1, extra_mult);
                add(xa, xb, x2, extra_mult);
            }
    for (int i = 1; i <= n; ++i)
        for (int xa : {x1, x2}) {
            add(y(i), xa, x1); add(y(i), xa, x2);
            add(xa, y(i), x1); add(xa, y(i), x2);
        }
    std::vector<int> dual(r, -1);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            if (mult[(size_t)(a * r + b) * r + 0] > 0) dual[a] = b;
    std::vector<std::uint8_t> coef((size_t)r * r * r);
    for (size_t t = 0; t < coef.size(); ++t) {
        if (mult[t] > 255) throw std::overflow_error("metaplectic: coefficient overflow");
        coef[t] = (std::uint8_t)mult[t];
    }
    std::string name;
    if (extra_mult > 0)
        name = std::string(twisted ? "twisted-" : "") + "family(n=" + std::to_string(n) + ")";
    else
        name = std::string(twisted ? "twisted-" : "") + "SO(" + std::to_string(N) + ")_2";
    FusionRing ring(r, std::move(dual), std::move(coef), name);
    AxiomReport rep = verify_axioms(ring, /*require_multiplicity_one=*/extra_mult <= 1);
    if (!rep.pass)
        throw std::logic_error("metaplectic constructor produced an invalid ring: " + rep.axiom);
    return ring;
}

} // namespace

FusionRing metaplectic_ring(int n) { return metaplectic_impl(n, false, 0); }
FusionRing twisted_metaplectic_ring(int n) { return metaplectic_impl(n, true, 0); }

FusionRing family_ring(int n, bool twisted) {
    if (n < 1) throw std::invalid_argument("family_ring: n must be >= 1");
    return metaplectic_impl(n, twisted, n);
}

} // namespace fusion
