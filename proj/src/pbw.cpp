#include "llwy/pbw.hpp"

#include <algorithm>

namespace llwy {

PbwOrder PbwOrder::identity(int n) {
    PbwOrder o;
    o.rankOf.resize(n);
    for (int i = 0; i < n; ++i) o.rankOf[i] = i;
    return o;
}

PbwOrder PbwOrder::split(int n, const std::vector<int>& cosetFirst) {
    PbwOrder o;
    o.rankOf.assign(n, -1);
    int r = 0;
    for (int b : cosetFirst) o.rankOf[b] = r++;
    for (int b = 0; b < n; ++b)
        if (o.rankOf[b] < 0) o.rankOf[b] = r++;
    return o;
}

Pbw::Pbw(std::shared_ptr<const LieAlgebra> L, PChar chi) : L_(std::move(L)), chi_(std::move(chi)) {}

uint16_t Pbw::chiPowP(int b) const {
    // chi(x)^p = chi(x) in F_p; chi vanishes off the f-block
    if (!L_->isF(b)) return 0;
    return chi_.onF(L_->rootOf(b));
}

void Pbw::straightenWord(uint16_t coeff, std::vector<uint8_t> word, const PbwOrder& ord,
                         std::map<std::vector<uint8_t>, uint16_t>& out) const {
    const uint16_t p = L_->p;
    // Worklist keyed by (length, inversions, word) and processed largest
    // first: every rewriting step strictly decreases the key, so each word is
    // popped at most once and equal intermediates merge their coefficients.
    auto inversions = [&](const std::vector<uint8_t>& w) {
        uint32_t inv = 0;
        for (size_t a = 0; a < w.size(); ++a)
            for (size_t b = a + 1; b < w.size(); ++b)
                if (ord.rankOf[w[a]] > ord.rankOf[w[b]]) ++inv;
        return inv;
    };
    using Key = std::tuple<size_t, uint32_t, std::vector<uint8_t>>;
    std::map<Key, uint16_t> work;
    auto push = [&](std::vector<uint8_t> w, uint16_t c) {
        if (!c) return;
        Key k{w.size(), inversions(w), std::move(w)};
        auto& slot = work[k];
        slot = fp_add(p, slot, c);
        if (!slot) work.erase(k);
    };
    push(std::move(word), coeff);
    while (!work.empty()) {
        auto it = std::prev(work.end());
        uint16_t c = it->second;
        std::vector<uint8_t> w = std::get<2>(it->first);
        work.erase(it);
        // first adjacent inversion
        size_t k = 0;
        bool inv = false;
        for (; k + 1 < w.size(); ++k)
            if (ord.rankOf[w[k]] > ord.rankOf[w[k + 1]]) { inv = true; break; }
        if (inv) {
            uint8_t a = w[k], b = w[k + 1];
            // x_a x_b = x_b x_a + [x_a, x_b]
            std::vector<uint8_t> swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            for (auto& [t, v] : L_->brk[a][b]) {
                std::vector<uint8_t> repl;
                repl.reserve(w.size() - 1);
                repl.insert(repl.end(), w.begin(), w.begin() + k);
                repl.push_back(static_cast<uint8_t>(t));
                repl.insert(repl.end(), w.begin() + k + 2, w.end());
                push(std::move(repl), fp_mul(p, c, v));
            }
            push(std::move(swapped), c);
            continue;
        }
        // sorted: reduce p-th powers x^p = x^[p] + chi(x)^p
        bool reduced = false;
        for (size_t i = 0; i < w.size() && !reduced;) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (j - i >= static_cast<size_t>(p)) {
                uint8_t x = w[i];
                std::vector<uint8_t> rest;
                rest.insert(rest.end(), w.begin(), w.begin() + i);
                size_t keep = j - i - p;  // exponent beyond the reduced power
                if (L_->pPowerIsSelf(x)) {
                    for (size_t t = 0; t < keep + 1; ++t) rest.push_back(x);  // h^p = h
                    rest.insert(rest.end(), w.begin() + j, w.end());
                    push(std::move(rest), c);
                } else {
                    uint16_t s = chiPowP(x);  // x^p = chi(x)^p, zero off the Levi
                    if (s) {
                        for (size_t t = 0; t < keep; ++t) rest.push_back(x);
                        rest.insert(rest.end(), w.begin() + j, w.end());
                        push(std::move(rest), fp_mul(p, c, s));
                    }
                }
                reduced = true;
            }
            i = j;
        }
        if (reduced) continue;
        auto& slot = out[w];
        slot = fp_add(p, slot, c);
        if (!slot) out.erase(w);
    }
}

PbwMono Pbw::monoFromWord(const std::vector<uint8_t>& sortedWord) const {
    PbwMono m(L_->n, 0);
    for (uint8_t b : sortedWord) ++m[b];
    return m;
}

std::vector<uint8_t> Pbw::wordFromMono(const PbwMono& m, const PbwOrder& ord) const {
    std::vector<std::pair<int, int>> byRank;
    for (int b = 0; b < L_->n; ++b)
        if (m[b]) byRank.emplace_back(ord.rankOf[b], b);
    std::sort(byRank.begin(), byRank.end());
    std::vector<uint8_t> w;
    for (auto& [r, b] : byRank)
        for (int t = 0; t < m[b]; ++t) w.push_back(static_cast<uint8_t>(b));
    return w;
}

PbwElt Pbw::one() { return {{PbwMono{}, 1}}; }

PbwElt Pbw::monomial(const PbwMono& m, uint16_t c) { return {{m, c}}; }

PbwElt Pbw::multiply(const PbwElt& a, const PbwElt& b) const {
    PbwOrder ord = PbwOrder::identity(L_->n);
    const uint16_t p = L_->p;
    std::map<std::vector<uint8_t>, uint16_t> acc;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            std::vector<uint8_t> w;
            PbwMono maFull = ma, mbFull = mb;
            maFull.resize(L_->n, 0);
            mbFull.resize(L_->n, 0);
            auto wa = wordFromMono(maFull, ord);
            auto wb = wordFromMono(mbFull, ord);
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            straightenWord(fp_mul(p, ca, cb), std::move(w), ord, acc);
        }
    PbwElt out;
    for (auto& [w, c] : acc)
        if (c) out[monoFromWord(w)] = c;
    return out;
}

}  // namespace llwy
