#include "hdiff/ring.hpp"

#include <algorithm>
#include <sstream>

namespace hdiff {

std::vector<std::vector<RatFunc>> invert_ratfunc_matrix(const std::vector<std::vector<RatFunc>>& m) {
    int n = (int)m.size();
    if (n == 0) return {};
    VarSpec spec = m[0][0].spec();
    std::vector<std::vector<RatFunc>> a = m, inv(n, std::vector<RatFunc>(n, RatFunc(spec)));
    for (int i = 0; i < n; ++i) inv[i][i] = RatFunc::constant(spec, 1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("invert_ratfunc_matrix: singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        RatFunc d = a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] = a[col][c] / d;
            inv[col][c] = inv[col][c] / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFunc f = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] = a[r][c] - f * a[col][c];
                inv[r][c] = inv[r][c] - f * inv[col][c];
            }
        }
    }
    return inv;
}

RingCtx::RingCtx(int n, int N, std::vector<RatFunc> sigma_sites, VarSpec spec)
    : n_(n), N_(N), spec_(spec), sigma_(std::move(sigma_sites)) {
    init();
}

RingCtx::RingCtx(int n, int N, std::vector<RatFunc> sigma_sites)
    : RingCtx(n, N, std::move(sigma_sites), VarSpec{n, 0}) {}

std::shared_ptr<const RingCtx> RingCtx::make(int n, int N, std::vector<RatFunc> sigma_sites) {
    return std::make_shared<const RingCtx>(n, N, std::move(sigma_sites));
}

std::shared_ptr<const RingCtx> RingCtx::make_matrix(int n, int N, std::vector<RatFunc> sigma_iab,
                                                    VarSpec spec) {
    auto ctx = std::make_shared<RingCtx>(n, N, std::vector<RatFunc>(n, RatFunc::constant(spec, 0)), spec);
    if ((int)sigma_iab.size() != n * N * N) throw Error("make_matrix: sigma tensor size");
    ctx->sigma_mat_ = std::move(sigma_iab);
    return ctx;
}

void RingCtx::init() {
    if ((int)sigma_.size() != n_) throw Error("RingCtx: need one sigma per site");
    if (n_ < 1 || N_ < 1) throw Error("RingCtx: need n >= 1, N >= 1");
    RatFunc one = rf(1);
    cross_.assign(n_ * n_, one);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i <= j) continue;
            RatFunc w = hdiff(i, j);
            cross_[i * n_ + j] = w * (w - rf(2)) / ((w - one) * (w - one));
        }
    m_.assign(n_ * n_, one);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k)
            if (i != k) m_[i * n_ + k] = one / (one + hdiff(k, i));
    std::vector<std::vector<RatFunc>> mm(n_, std::vector<RatFunc>(n_, one));
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) mm[i][k] = m_[i * n_ + k];
    auto inv = invert_ratfunc_matrix(mm);
    minv_.assign(n_ * n_, one);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) minv_[i * n_ + k] = inv[i][k];
}

RatFunc RingCtx::sigma(int i, int a, int b) const {
    if (!sigma_mat_.empty()) return sigma_mat_[(i * N_ + a) * N_ + b];
    if (a == b) return sigma_[i];
    return RatFunc(spec_);
}

const RatFunc& RingCtx::sigma_site(int i) const { return sigma_[i]; }
const RatFunc& RingCtx::cross_coef(int i, int j) const { return cross_[i * n_ + j]; }
const RatFunc& RingCtx::m_entry(int i, int k) const { return m_[i * n_ + k]; }
const RatFunc& RingCtx::minv_entry(int i, int k) const { return minv_[i * n_ + k]; }

// ---------------------------------------------------------------------------

Element Element::zero(Ctx ctx, OrderTag tag) { return Element(std::move(ctx), tag); }

Element Element::one(Ctx ctx, OrderTag tag) {
    VarSpec s = ctx->spec();
    return coefficient(std::move(ctx), RatFunc::constant(s, 1), tag);
}

Element Element::coefficient(Ctx ctx, const RatFunc& f, OrderTag tag) {
    Element e(ctx, tag);
    if (!f.is_zero()) e.terms_[Key(2 * ctx->gens_per_kind(), 0)] = f;
    return e;
}

Element Element::generator(Ctx ctx, const Gen& g, OrderTag tag) {
    Element e(ctx, tag);
    Key m(2 * ctx->gens_per_kind(), 0);
    int slot = g.der ? ctx->dslot(g.site, g.copy) : ctx->gens_per_kind() + ctx->xslot(g.site, g.copy);
    m[slot] = 1;
    e.terms_[m] = RatFunc::constant(ctx->spec(), 1);
    return e;
}

Element Element::gen_x(Ctx ctx, int site, int copy, OrderTag tag) {
    return generator(std::move(ctx), Gen{false, site, copy}, tag);
}

Element Element::gen_d(Ctx ctx, int site, int copy, OrderTag tag) {
    return generator(std::move(ctx), Gen{true, site, copy}, tag);
}

void Element::add_term(const Key& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Element::filtration_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += std::abs(e);
        d = std::max(d, s);
    }
    return d;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element& Element::operator+=(const Element& o) {
    if (!ctx_) return *this = o;
    if (o.terms_.empty()) return *this;
    if (ctx_ != o.ctx_) throw Error("Element: context mismatch");
    if (tag_ != o.tag_) throw Error("Element: order tag mismatch");
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element Element::operator-() const {
    Element r(ctx_, tag_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

bool Element::operator==(const Element& o) const {
    return terms_ == o.terms_;
}

Element Element::scaled(const RatFunc& f) const {
    Element r(ctx_, tag_);
    if (f.is_zero()) return r;
    for (auto& [m, c] : terms_) r.add_term(m, f * c);
    return r;
}

std::vector<int> Element::mono_weight(const RingCtx& ctx, const Key& m) {
    std::vector<int> w(ctx.n(), 0);
    int G = ctx.gens_per_kind();
    for (int s = 0; s < G; ++s) {
        if (m[s]) w[ctx.dgen_of_slot(s).site] -= m[s];
        if (m[G + s]) w[ctx.xgen_of_slot(s).site] += m[G + s];
    }
    return w;
}

std::optional<std::vector<int>> Element::weight() const {
    std::optional<std::vector<int>> w;
    for (auto& [m, c] : terms_) {
        auto mw = mono_weight(*ctx_, m);
        if (!w) w = mw;
        else if (*w != mw) return std::nullopt;
    }
    if (!w) w = std::vector<int>(ctx_->n(), 0);
    return w;
}

namespace {

// letters of a normal monomial in written order for the given tag
std::vector<Gen> letters_of(const RingCtx& ctx, const Element::Key& m, OrderTag tag) {
    std::vector<Gen> d, x;
    int G = ctx.gens_per_kind();
    for (int s = 0; s < G; ++s)
        for (int r = 0; r < m[s]; ++r) d.push_back(ctx.dgen_of_slot(s));
    for (int s = 0; s < G; ++s)
        for (int r = 0; r < m[G + s]; ++r) x.push_back(ctx.xgen_of_slot(s));
    std::vector<Gen> out;
    if (tag == OrderTag::DerFirst) {
        out = d;
        out.insert(out.end(), x.begin(), x.end());
    } else {
        out = x;
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

int first_nonzero(const Element::Key& m, int from, int to) {
    for (int s = from; s < to; ++s)
        if (m[s] != 0) return s;
    return -1;
}

}  // namespace

Element prepend_letter(const Gen& g, const Element& e) {
    Element out(e.ctx(), e.tag());
    for (auto& [m, c] : e.terms()) {
        RatFunc cs = g.der ? c.shift_one(g.site, +1) : c.shift_one(g.site, -1);
        Element base(e.ctx(), e.tag());
        base.add_term(m, RatFunc::constant(e.ctx()->spec(), 1));
        // normal form of g * m, then scale by shifted coefficient
        Element nf = base.prepended(g);
        out += nf.scaled(cs);
    }
    return out;
}

// Normal form of g * m for a single monomial with unit coefficient. All rule
// coefficients land leftmost, which is where the caller keeps them.
Element Element::prepended(const Gen& g) const {
    const RingCtx& ctx = *ctx_;
    int G = ctx.gens_per_kind();
    Element out(ctx_, tag_);
    RatFunc one = RatFunc::constant(ctx.spec(), 1);

    for (auto& [m, c0] : terms_) {
        if (c0.is_zero()) continue;
        // c0 is expected to be 1 here; keep general by scaling at the end.
        Key m2 = m;

        auto emit = [&](const Element& e) { out += e.scaled(c0); };

        auto single = [&](const Key& k) {
            Element e(ctx_, tag_);
            e.add_term(k, one);
            return e;
        };

        if (tag_ == OrderTag::DerFirst) {
            if (g.der) {
                // insert into the d-block at the left end
                int s0 = first_nonzero(m2, 0, G);
                int gs = ctx.dslot(g.site, g.copy);
                if (s0 < 0 || gs <= s0) {
                    m2[gs] += 1;
                    emit(single(m2));
                    continue;
                }
                Gen h = ctx.dgen_of_slot(s0);
                m2[s0] -= 1;
                Element rest = single(m2);
                if (g.site == h.site) {
                    emit(prepend_letter(h, prepend_letter(g, rest)));
                } else {
                    // site(g) < site(h): d_{ia} d_{jb} = d_{jb} d_{ia} - (1/h_ij) d_{ja} d_{ib}
                    int i = g.site, j = h.site;
                    RatFunc inv = one / ctx.hdiff(i, j);
                    Element t1 = prepend_letter(Gen{true, j, h.copy},
                                                prepend_letter(Gen{true, i, g.copy}, rest));
                    Element t2 = prepend_letter(Gen{true, j, g.copy},
                                                prepend_letter(Gen{true, i, h.copy}, rest));
                    emit(t1 - t2.scaled(inv));
                }
            } else {
                int s0 = first_nonzero(m2, 0, G);
                if (s0 >= 0) {
                    // x-letter crosses the leading d-letter
                    Gen h = ctx.dgen_of_slot(s0);
                    m2[s0] -= 1;
                    Element rest = single(m2);
                    int i = g.site, j = h.site;
                    if (i != j) {
                        Element t = prepend_letter(h, prepend_letter(g, rest));
                        emit(t.scaled(ctx.cross_coef(i, j)));
                    } else {
                        Element acc(ctx_, tag_);
                        for (int k = 0; k < ctx.n(); ++k) {
                            Element t = prepend_letter(Gen{true, k, h.copy},
                                                       prepend_letter(Gen{false, k, g.copy}, rest));
                            acc += t.scaled(ctx.m_entry(i, k));
                        }
                        acc -= rest.scaled(ctx.sigma(i, g.copy, h.copy));
                        emit(acc);
                    }
                } else {
                    // insert into the x-block
                    int x0 = first_nonzero(m2, G, 2 * G);
                    int gs = G + ctx.xslot(g.site, g.copy);
                    if (x0 < 0 || gs <= x0) {
                        m2[gs] += 1;
                        emit(single(m2));
                        continue;
                    }
                    Gen h = ctx.xgen_of_slot(x0 - G);
                    m2[x0] -= 1;
                    Element rest = single(m2);
                    if (g.site == h.site) {
                        emit(prepend_letter(h, prepend_letter(g, rest)));
                    } else {
                        // site(g) > site(h): x^{jA} x^{iB} =
                        //   w^2/(w^2-1) x^{iB} x^{jA} - w/(w^2-1) x^{iA} x^{jB}
                        int i = h.site, j = g.site;
                        RatFunc w = ctx.hdiff(i, j);
                        RatFunc den = w * w - one;
                        Element t1 = prepend_letter(Gen{false, i, h.copy},
                                                    prepend_letter(Gen{false, j, g.copy}, rest));
                        Element t2 = prepend_letter(Gen{false, i, g.copy},
                                                    prepend_letter(Gen{false, j, h.copy}, rest));
                        emit(t1.scaled(w * w / den) - t2.scaled(w / den));
                    }
                }
            }
        } else {  // XFirst
            if (!g.der) {
                int x0 = first_nonzero(m2, G, 2 * G);
                int gs = G + ctx.xslot(g.site, g.copy);
                if (x0 < 0 || gs <= x0) {
                    m2[gs] += 1;
                    emit(single(m2));
                    continue;
                }
                Gen h = ctx.xgen_of_slot(x0 - G);
                m2[x0] -= 1;
                Element rest = single(m2);
                if (g.site == h.site) {
                    emit(prepend_letter(h, prepend_letter(g, rest)));
                } else {
                    int i = h.site, j = g.site;
                    RatFunc w = ctx.hdiff(i, j);
                    RatFunc den = w * w - one;
                    Element t1 = prepend_letter(Gen{false, i, h.copy},
                                                prepend_letter(Gen{false, j, g.copy}, rest));
                    Element t2 = prepend_letter(Gen{false, i, g.copy},
                                                prepend_letter(Gen{false, j, h.copy}, rest));
                    emit(t1.scaled(w * w / den) - t2.scaled(w / den));
                }
            } else {
                int x0 = first_nonzero(m2, G, 2 * G);
                if (x0 >= 0) {
                    // d-letter crosses the leading x-letter
                    Gen h = ctx.xgen_of_slot(x0 - G);
                    m2[x0] -= 1;
                    Element rest = single(m2);
                    int j = g.site, i = h.site;
                    if (i != j) {
                        Element t = prepend_letter(h, prepend_letter(g, rest));
                        emit(t.scaled(one / ctx.cross_coef(i, j)));
                    } else {
                        Element acc(ctx_, tag_);
                        RatFunc s(ctx.spec());
                        for (int k = 0; k < ctx.n(); ++k) {
                            Element t = prepend_letter(Gen{false, k, h.copy},
                                                       prepend_letter(Gen{true, k, g.copy}, rest));
                            acc += t.scaled(ctx.minv_entry(i, k));
                            s += ctx.minv_entry(i, k) * ctx.sigma(k, h.copy, g.copy);
                        }
                        acc += rest.scaled(s);
                        emit(acc);
                    }
                } else {
                    int s0 = first_nonzero(m2, 0, G);
                    int gs = ctx.dslot(g.site, g.copy);
                    if (s0 < 0 || gs <= s0) {
                        m2[gs] += 1;
                        emit(single(m2));
                        continue;
                    }
                    Gen h = ctx.dgen_of_slot(s0);
                    m2[s0] -= 1;
                    Element rest = single(m2);
                    if (g.site == h.site) {
                        emit(prepend_letter(h, prepend_letter(g, rest)));
                    } else {
                        int i = g.site, j = h.site;
                        RatFunc inv = one / ctx.hdiff(i, j);
                        Element t1 = prepend_letter(Gen{true, j, h.copy},
                                                    prepend_letter(Gen{true, i, g.copy}, rest));
                        Element t2 = prepend_letter(Gen{true, j, g.copy},
                                                    prepend_letter(Gen{true, i, h.copy}, rest));
                        emit(t1 - t2.scaled(inv));
                    }
                }
            }
        }
    }
    return out;
}

Element Element::operator*(const Element& o) const {
    if (ctx_ != o.ctx_) throw Error("Element: context mismatch");
    if (tag_ != o.tag_) throw Error("Element: order tag mismatch");
    Element out(ctx_, tag_);
    for (auto& [ma, ca] : terms_) {
        std::vector<Gen> la = letters_of(*ctx_, ma, tag_);
        for (auto& [mb, cb] : o.terms_) {
            Element acc(ctx_, tag_);
            acc.add_term(mb, cb);
            for (auto it = la.rbegin(); it != la.rend(); ++it) acc = prepend_letter(*it, acc);
            out += acc.scaled(ca);
        }
    }
    return out;
}

Element Element::pow(int k) const {
    if (k < 0) throw Error("Element::pow: negative power");
    Element r = one(ctx_, tag_);
    Element b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

Element Element::times_coeff_right(const RatFunc& f) const {
    return *this * coefficient(ctx_, f, tag_);
}

Element Element::converted(OrderTag target) const {
    if (target == tag_) return *this;
    Element out(ctx_, target);
    for (auto& [m, c] : terms_) {
        out += word(ctx_, target, letters_of(*ctx_, m, tag_), c);
    }
    return out;
}

Element Element::word(Ctx ctx, OrderTag tag, const std::vector<Gen>& letters, const RatFunc& coef) {
    Element acc = one(ctx, tag);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) acc = prepend_letter(*it, acc);
    return acc.scaled(coef);
}

Element Element::word(Ctx ctx, OrderTag tag, const std::vector<Gen>& letters) {
    return word(ctx, tag, letters, RatFunc::constant(ctx->spec(), 1));
}

Element Element::eps_antiauto() const {
    const RingCtx& ctx = *ctx_;
    Element out(ctx_, tag_);
    RatFunc one = RatFunc::constant(ctx.spec(), 1);
    for (auto& [m, c] : terms_) {
        std::vector<Gen> ls = letters_of(ctx, m, tag_);
        Element acc = Element::one(ctx_, tag_);
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
            const Gen& g = *it;
            RatFunc phi = phi_func(ctx.spec(), ctx.n(), g.site);
            Element img(ctx_, tag_);
            if (g.der) {
                img = gen_x(ctx_, g.site, g.copy, tag_).scaled(phi);
            } else {
                img = gen_d(ctx_, g.site, g.copy, tag_).scaled(phi.inverse().shift_one(g.site, +1));
            }
            acc = acc * img;
        }
        out += acc.times_coeff_right(c);
    }
    return out;
}

std::string Element::str() const {
    if (terms_.empty()) return "(0)";
    const RingCtx& ctx = *ctx_;
    VarNames vn = cartan_names(ctx.n());
    for (int a = ctx.n(); a < ctx.spec().size(); ++a) vn.names.push_back("u" + std::to_string(a));
    std::ostringstream os;
    bool first = true;
    int G = ctx.gens_per_kind();
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str(vn) << ")";
        auto put = [&](const char* sym, const Gen& g, int e) {
            os << "*" << sym << "[" << g.site + 1 << "," << g.copy + 1 << "]";
            if (e != 1) os << "^" << e;
        };
        if (tag_ == OrderTag::DerFirst) {
            for (int s = 0; s < G; ++s)
                if (m[s]) put("d", ctx.dgen_of_slot(s), m[s]);
            for (int s = 0; s < G; ++s)
                if (m[G + s]) put("x", ctx.xgen_of_slot(s), m[G + s]);
        } else {
            for (int s = 0; s < G; ++s)
                if (m[G + s]) put("x", ctx.xgen_of_slot(s), m[G + s]);
            for (int s = 0; s < G; ++s)
                if (m[s]) put("d", ctx.dgen_of_slot(s), m[s]);
        }
        first = false;
    }
    return os.str();
}

Element gamma_element(Element::Ctx ctx, int site, int copy, OrderTag tag) {
    return Element::word(ctx, tag, {Gen{true, site, copy}, Gen{false, site, copy}});
}

Report self_test_relations(Element::Ctx ctx) {
    Report rep;
    const RingCtx& c = *ctx;
    VarSpec spec = c.spec();
    RatFunc one = RatFunc::constant(spec, 1);
    for (int copy = 0; copy < c.copies(); ++copy) {
        std::string tagc = c.copies() > 1 ? "[copy " + std::to_string(copy + 1) + "]" : "";
        // Gamma exchange relations
        bool gx = true, gd = true, gg = true;
        std::string wx, wd, wg;
        for (int i = 0; i < c.n(); ++i) {
            Element gi = gamma_element(ctx, i, copy);
            for (int j = 0; j < c.n(); ++j) {
                if (i != j) {
                    RatFunc w = c.hdiff(i, j);
                    Element xj = Element::gen_x(ctx, j, copy);
                    Element dj = Element::gen_d(ctx, j, copy);
                    if (gi * xj != (xj * gi).scaled((w + one) / w)) {
                        gx = false;
                        wx = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    }
                    if (gi * dj != (dj * gi).scaled((w - one) / w)) {
                        gd = false;
                        wd = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    }
                }
                Element gj = gamma_element(ctx, j, copy);
                if (gi * gj != gj * gi) {
                    gg = false;
                    wg = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
            }
        }
        rep.add("gamma_x_exchange" + tagc, gx, wx);
        rep.add("gamma_d_exchange" + tagc, gd, wd);
        rep.add("gamma_commute" + tagc, gg, wg);

        // twisted commuting families
        bool xc = true, dc = true;
        std::string wxc, wdc;
        std::vector<Element> xs, ds;
        for (int i = 0; i < c.n(); ++i) {
            RatFunc psip(psi_prime_poly(spec, c.n(), i));
            xs.push_back(Element::gen_x(ctx, i, copy).times_coeff_right(psip));
            ds.push_back(Element::gen_d(ctx, i, copy).times_coeff_right(psip));
        }
        for (int i = 0; i < c.n(); ++i)
            for (int j = 0; j < c.n(); ++j) {
                if (xs[i] * xs[j] != xs[j] * xs[i]) {
                    xc = false;
                    wxc = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
                if (ds[i] * ds[j] != ds[j] * ds[i]) {
                    dc = false;
                    wdc = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                }
            }
        rep.add("twisted_x_family_commutes" + tagc, xc, wxc);
        rep.add("twisted_d_family_commutes" + tagc, dc, wdc);
    }
    return rep;
}

}  // namespace hdiff
