#include "hdiff/localized.hpp"

#include <sstream>

namespace hdiff {

LocElement LocElement::one(Ctx ctx) {
    VarSpec s = ctx->spec();
    return coefficient(std::move(ctx), RatFunc::constant(s, 1));
}

LocElement LocElement::coefficient(Ctx ctx, const RatFunc& f) {
    LocElement e(ctx);
    if (ctx->copies() != 1) throw Error("LocElement: single copy only");
    if (!f.is_zero()) e.terms_[Key(2 * ctx->n(), 0)] = f;
    return e;
}

LocElement LocElement::gen_x(Ctx ctx, int site, int power) {
    LocElement e = one(ctx);
    if (power == 0) return e;
    Key m(2 * ctx->n(), 0);
    m[ctx->n() + site] = power;
    LocElement r(ctx);
    r.terms_[m] = RatFunc::constant(ctx->spec(), 1);
    return r;
}

LocElement LocElement::gen_d(Ctx ctx, int site) {
    Key m(2 * ctx->n(), 0);
    m[ctx->n() - 1 - site] = 1;
    LocElement r(ctx);
    r.terms_[m] = RatFunc::constant(ctx->spec(), 1);
    return r;
}

LocElement LocElement::from_element(const Element& e) {
    if (e.ctx()->copies() != 1) throw Error("LocElement: single copy only");
    if (e.tag() != OrderTag::DerFirst) return from_element(e.converted(OrderTag::DerFirst));
    LocElement r(e.ctx());
    for (auto& [m, c] : e.terms()) r.terms_[m] = c;  // same slot layout for N = 1
    return r;
}

void LocElement::add_term(const Key& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LocElement LocElement::operator+(const LocElement& o) const {
    LocElement r = *this;
    r += o;
    return r;
}

LocElement& LocElement::operator+=(const LocElement& o) {
    if (!ctx_) return *this = o;
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LocElement LocElement::operator-(const LocElement& o) const { return *this + (-o); }

LocElement LocElement::operator-() const {
    LocElement r(ctx_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

LocElement LocElement::scaled(const RatFunc& f) const {
    LocElement r(ctx_);
    if (f.is_zero()) return r;
    for (auto& [m, c] : terms_) r.add_term(m, f * c);
    return r;
}

LocElement LocElement::times_coeff_right(const RatFunc& f) const {
    return *this * coefficient(ctx_, f);
}

std::vector<LocElement::Letter> LocElement::letters(const Key& m) const {
    int n = ctx_->n();
    std::vector<Letter> out;
    for (int s = 0; s < n; ++s)
        for (int r = 0; r < m[s]; ++r) out.push_back({0, n - 1 - s});
    for (int site = 0; site < n; ++site) {
        int e = m[n + site];
        for (int r = 0; r < std::abs(e); ++r) out.push_back({e > 0 ? 1 : 2, site});
    }
    return out;
}

LocElement LocElement::prepend(const Letter& g, const LocElement& e) {
    LocElement out(e.ctx_);
    for (auto& [m, c] : e.terms_) {
        RatFunc cs = (g.kind == 0 || g.kind == 2) ? c.shift_one(g.site, +1) : c.shift_one(g.site, -1);
        LocElement base(e.ctx_);
        base.add_term(m, RatFunc::constant(e.ctx_->spec(), 1));
        out += base.prepended_mono(g).scaled(cs);
    }
    return out;
}

LocElement LocElement::prepended_mono(const Letter& g) const {
    const RingCtx& c = *ctx_;
    int n = c.n();
    VarSpec spec = c.spec();
    RatFunc one = RatFunc::constant(spec, 1);
    LocElement out(ctx_);

    for (auto& [m, c0] : terms_) {
        Key m2 = m;
        auto emit = [&](const LocElement& e) { out += e.scaled(c0); };
        auto single = [&](const Key& k) {
            LocElement e(ctx_);
            e.add_term(k, one);
            return e;
        };
        int firstd = -1;
        for (int s = 0; s < n; ++s)
            if (m2[s] != 0) {
                firstd = s;
                break;
            }

        if (g.kind == 0) {
            // derivative letter enters the dbar block
            int gs = n - 1 - g.site;
            if (firstd < 0 || gs <= firstd) {
                m2[gs] += 1;
                emit(single(m2));
                continue;
            }
            int hsite = n - 1 - firstd;  // hsite > g.site
            m2[firstd] -= 1;
            LocElement rest = single(m2);
            // dbar_i dbar_j = ((h_ij - 1)/h_ij) dbar_j dbar_i for i < j
            int i = g.site, j = hsite;
            RatFunc w = c.hdiff(i, j);
            emit(prepend({0, j}, prepend({0, i}, rest)).scaled((w - one) / w));
            continue;
        }

        int s = g.kind == 1 ? +1 : -1;
        if (firstd >= 0) {
            int j = n - 1 - firstd;  // leading derivative site
            m2[firstd] -= 1;
            LocElement rest = single(m2);
            if (g.site != j) {
                RatFunc cf = c.cross_coef(g.site, j);
                if (s < 0) cf = (cf.shift_one(g.site, +1)).inverse();
                emit(prepend({0, j}, prepend({g.kind, g.site}, rest)).scaled(cf));
            } else if (s > 0) {
                LocElement acc(ctx_);
                for (int k = 0; k < n; ++k)
                    acc += prepend({0, k}, prepend({1, k}, rest)).scaled(c.m_entry(g.site, k));
                acc -= rest.scaled(c.sigma(g.site, 0, 0));
                emit(acc);
            } else {
                // x^{i,-1} dbar_i = Gamma_i x^{i,-2}
                //   - sum_{k != i} (1/(h_ki - 1)) Gamma_k x^{i,-2} + sigma_i[eps_i] x^{i,-2}
                int i = g.site;
                LocElement acc(ctx_);
                auto tail = [&](int ksite) {
                    return prepend({0, ksite},
                                   prepend({1, ksite}, prepend({2, i}, prepend({2, i}, rest))));
                };
                acc += tail(i);
                for (int k = 0; k < n; ++k) {
                    if (k == i) continue;
                    RatFunc coef = one / (c.hdiff(k, i) - one);
                    acc -= tail(k).scaled(coef);
                }
                acc += prepend({2, i}, prepend({2, i}, rest)).scaled(c.sigma(i, 0, 0).shift_one(i, +1));
                emit(acc);
            }
            continue;
        }

        // no derivative letters: insert into the x block
        int firstx = -1;
        for (int site = 0; site < n; ++site)
            if (m2[n + site] != 0) {
                firstx = site;
                break;
            }
        if (firstx < 0 || g.site <= firstx) {
            m2[n + g.site] += s;
            emit(single(m2));
            continue;
        }
        int i = firstx, j = g.site;  // i < j
        int u = m2[n + i] > 0 ? +1 : -1;
        m2[n + i] -= u;
        LocElement rest = single(m2);
        RatFunc w = c.hdiff(i, j);
        RatFunc cf;
        if (u > 0 && s > 0) cf = w / (w + one);
        else if (u > 0 && s < 0) cf = w / (w - one);
        else if (u < 0 && s > 0) cf = (w + RatFunc::constant(spec, 2)) / (w + one);
        else cf = w / (w + one);
        emit(prepend({u > 0 ? 1 : 2, i}, prepend({g.kind, g.site}, rest)).scaled(cf));
    }
    return out;
}

LocElement LocElement::operator*(const LocElement& o) const {
    if (ctx_ != o.ctx_) throw Error("LocElement: context mismatch");
    LocElement out(ctx_);
    for (auto& [ma, ca] : terms_) {
        std::vector<Letter> la = letters(ma);
        for (auto& [mb, cb] : o.terms_) {
            LocElement acc(ctx_);
            acc.add_term(mb, cb);
            for (auto it = la.rbegin(); it != la.rend(); ++it) acc = prepend(*it, acc);
            out += acc.scaled(ca);
        }
    }
    return out;
}

LocElement LocElement::pow(int k) const {
    if (k < 0) throw Error("LocElement::pow: negative power");
    LocElement r = one(ctx_);
    LocElement b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::optional<Element> LocElement::to_element() const {
    int n = ctx_->n();
    Element e = Element::zero(ctx_);
    for (auto& [m, c] : terms_) {
        for (int site = 0; site < n; ++site)
            if (m[n + site] < 0) return std::nullopt;
        std::vector<Gen> w;
        for (int s = 0; s < n; ++s)
            for (int r = 0; r < m[s]; ++r) w.push_back(Gen{true, n - 1 - s, 0});
        for (int site = 0; site < n; ++site)
            for (int r = 0; r < m[n + site]; ++r) w.push_back(Gen{false, site, 0});
        e += Element::word(ctx_, OrderTag::DerFirst, w, c);
    }
    return e;
}

std::string LocElement::str() const {
    if (terms_.empty()) return "(0)";
    int n = ctx_->n();
    VarNames vn = cartan_names(n);
    for (int a = n; a < ctx_->spec().size(); ++a) vn.names.push_back("u" + std::to_string(a));
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str(vn) << ")";
        for (int s = 0; s < n; ++s)
            if (m[s]) {
                os << "*d[" << n - s << "]";
                if (m[s] != 1) os << "^" << m[s];
            }
        for (int site = 0; site < n; ++site)
            if (m[n + site]) {
                os << "*x[" << site + 1 << "]";
                if (m[n + site] != 1) os << "^" << m[n + site];
            }
        first = false;
    }
    return os.str();
}

LocElement twisted_x(LocElement::Ctx ctx, int site) {
    RatFunc psip(psi_prime_poly(ctx->spec(), ctx->n(), site));
    return LocElement::gen_x(ctx, site).times_coeff_right(psip);
}

LocElement twisted_x_inverse(LocElement::Ctx ctx, int site) {
    RatFunc psip(psi_prime_poly(ctx->spec(), ctx->n(), site));
    return LocElement::gen_x(ctx, site, -1).scaled(psip.inverse());
}

}  // namespace hdiff
