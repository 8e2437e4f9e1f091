#include "hdiff/weyl.hpp"

#include <sstream>

namespace hdiff {

WeylElement WeylElement::one(int n, VarSpec spec) {
    return coefficient(n, spec, RatFunc::constant(spec, 1));
}

WeylElement WeylElement::coefficient(int n, VarSpec spec, const RatFunc& f) {
    WeylElement e(n, spec);
    if (!f.is_zero()) e.terms_[Key(n, 0)] = f;
    return e;
}

WeylElement WeylElement::X(int n, VarSpec spec, int i, int power) {
    WeylElement e(n, spec);
    Key m(n, 0);
    m[i] = power;
    e.terms_[m] = RatFunc::constant(spec, 1);
    return e;
}

WeylElement WeylElement::D(int n, VarSpec spec, int i) {
    // D_i = X^{-1}_i (H_i - 1) in normal form
    WeylElement e(n, spec);
    Key m(n, 0);
    m[i] = -1;
    e.terms_[m] = RatFunc::variable(spec, i) - RatFunc::constant(spec, 1);
    return e;
}

WeylElement WeylElement::H(int n, VarSpec spec, int i) {
    return coefficient(n, spec, RatFunc::variable(spec, i));
}

WeylElement WeylElement::a(int n, VarSpec spec, int i) {
    return coefficient(n, spec, RatFunc::variable(spec, n + i));
}

std::optional<RatFunc> WeylElement::as_coefficient() const {
    if (terms_.empty()) return RatFunc(spec_);
    if (terms_.size() != 1) return std::nullopt;
    auto& [m, c] = *terms_.begin();
    for (int e : m)
        if (e != 0) return std::nullopt;
    return c;
}

void WeylElement::add_term(const Key& m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    WeylElement r = *this;
    r += o;
    return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (terms_.empty() && n_ == 0) return *this = o;
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + (-o); }

WeylElement WeylElement::operator-() const {
    WeylElement r(n_, spec_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement r(n_, spec_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            Key m(n_);
            for (int i = 0; i < n_; ++i) m[i] = ma[i] + mb[i];
            // X^a f X^b g = X^{a+b} f[+b] g
            r.add_term(m, ca.shift(mb) * cb);
        }
    return r;
}

WeylElement WeylElement::scaled(const RatFunc& f) const {
    WeylElement r(n_, spec_);
    if (f.is_zero()) return r;
    for (auto& [m, c] : terms_) r.add_term(m, c * f);
    return r;
}

WeylElement WeylElement::left_scaled(const RatFunc& f) const {
    WeylElement r(n_, spec_);
    if (f.is_zero()) return r;
    for (auto& [m, c] : terms_) r.add_term(m, f.shift(m) * c);
    return r;
}

WeylElement WeylElement::pow(int k) const {
    if (k < 0) throw Error("WeylElement::pow: negative power");
    WeylElement r = one(n_, spec_);
    WeylElement b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "(0)";
    VarNames vn;
    for (int i = 1; i <= n_; ++i) vn.names.push_back("H" + std::to_string(i));
    for (int i = 1; i <= spec_.naux; ++i) vn.names.push_back(i <= n_ ? "a" + std::to_string(i)
                                                                     : "u" + std::to_string(i));
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        for (int i = 0; i < n_; ++i)
            if (m[i]) {
                os << "X[" << i + 1 << "]";
                if (m[i] != 1) os << "^" << m[i];
                os << "*";
            }
        os << "(" << c.str(vn) << ")";
        first = false;
    }
    return os.str();
}

RatFunc extend_spec(const RatFunc& f, VarSpec target) {
    VarSpec src = f.spec();
    if (src.size() > target.size() || src.nshift > target.nshift)
        throw Error("extend_spec: target too small");
    std::vector<std::pair<int, MPoly>> assign;
    for (int v = 0; v < src.size(); ++v) assign.emplace_back(v, MPoly::variable(target, v));
    return f.subst(assign, target);
}

// ---------------------------------------------------------------- WeylIso

WeylIso::WeylIso(int n, const SigmaSpec& sigma) : n_(n), sigma_(sigma) {
    wspec_ = WeylElement::default_spec(n);
    ctx_ = make_ring(n, 1, sigma);
    c_ = central_elements(ctx_, sigma);
    for (auto& c : c_) c_loc_.push_back(LocElement::from_element(c));
}

RatFunc WeylIso::upsilon(int i) const {
    // Upsilon_i = sum_k (-1)^{k-1} H_i^{n-k} a_k + pi_i(H_i)
    RatFunc out(wspec_);
    for (int k = 1; k <= n_; ++k) {
        RatFunc t = RatFunc(MPoly::variable(wspec_, i, n_ - k)) * RatFunc::variable(wspec_, n_ + (k - 1));
        out += (k % 2 == 1) ? t : -t;
    }
    out += sigma_.full_site(i).f.subst({{0, MPoly::variable(wspec_, i)}}, wspec_);
    return out;
}

WeylElement WeylIso::image_h(int i) const { return WeylElement::H(n_, wspec_, i); }

WeylElement WeylIso::image_x(int i) const {
    // x^i -> X^i (1/Psi'_i)
    RatFunc psip = extend_spec(RatFunc(psi_prime_poly(VarSpec{n_, 0}, n_, i)), wspec_);
    return WeylElement::X(n_, wspec_, i).scaled(psip.inverse());
}

WeylElement WeylIso::image_d(int i) const {
    // dbar_i -> X^{-1}_i (Upsilon_i/Psi_i)[-eps_i]
    RatFunc psi = extend_spec(RatFunc(psi_poly(VarSpec{n_, 0}, n_, i)), wspec_);
    RatFunc coef = (upsilon(i) / psi).shift_one(i, -1);
    return WeylElement::X(n_, wspec_, i, -1).scaled(coef);
}

WeylElement WeylIso::mu_inverse(const Element& e) const {
    return mu_inverse(LocElement::from_element(e));
}

WeylElement WeylIso::mu_inverse(const LocElement& e) const {
    WeylElement out = WeylElement::zero(n_, wspec_);
    WeylElement xinv[16];
    for (int i = 0; i < n_; ++i) {
        // (mu^{-1} x^i)^{-1} = X^{-1}_i Psi'_i[-eps_i]
        RatFunc psip = extend_spec(RatFunc(psi_prime_poly(VarSpec{n_, 0}, n_, i)), wspec_);
        xinv[i] = WeylElement::X(n_, wspec_, i, -1).scaled(psip.shift_one(i, -1));
    }
    for (auto& [m, c] : e.terms()) {
        WeylElement acc = WeylElement::coefficient(n_, wspec_, extend_spec(c, wspec_));
        for (int s = 0; s < n_; ++s)
            for (int r = 0; r < m[s]; ++r) acc = acc * image_d(n_ - 1 - s);
        for (int site = 0; site < n_; ++site) {
            int ee = m[n_ + site];
            for (int r = 0; r < std::abs(ee); ++r)
                acc = acc * (ee > 0 ? image_x(site) : xinv[site]);
        }
        out += acc;
    }
    return out;
}

LocElement WeylIso::mu_forward(const WeylElement& w) const {
    LocElement out = LocElement::zero(ctx_);
    VarSpec rspec = ctx_->spec();
    for (auto& [m, c] : w.terms()) {
        // split the coefficient by powers of the central labels
        if (!c.is_polynomial()) {
            for (auto& [f, mult] : c.den_factors())
                for (int v = n_; v < wspec_.size(); ++v)
                    if (f.degree_in(v) > 0) throw Error("mu_forward: denominator contains a central label");
        }
        LocElement xpart = LocElement::one(ctx_);
        for (int i = 0; i < n_; ++i) {
            if (m[i] == 0) continue;
            LocElement g = m[i] > 0 ? twisted_x(ctx_, i) : twisted_x_inverse(ctx_, i);
            for (int r = 0; r < std::abs(m[i]); ++r) xpart = xpart * g;
        }
        // numerator: expand in the a-variables
        MPoly num = c.num();
        RatFunc den = RatFunc::constant(rspec, 1);
        for (auto& [f, mult] : c.den_factors()) {
            std::vector<std::pair<int, MPoly>> back;
            for (int v = 0; v < n_; ++v) back.emplace_back(v, MPoly::variable(rspec, v));
            den = den * RatFunc(MPoly::constant(rspec, 1), f.subst(back, rspec)).pow(mult);
        }
        LocElement terms = LocElement::zero(ctx_);
        for (auto& [mono, coef] : num.terms()) {
            LocElement piece = LocElement::one(ctx_);
            Mono hmono(rspec.size(), 0);
            for (int v = 0; v < n_; ++v) hmono[v] = mono[v];
            MPoly hm(rspec);
            hm.set_coeff(hmono, coef);
            piece = piece.scaled(RatFunc(hm));
            for (int k = 0; k < n_; ++k)
                for (int r = 0; r < mono[n_ + k]; ++r) piece = piece * c_loc_[k];
            terms += piece;
        }
        out += xpart * terms.scaled(den);
    }
    return out;
}

Report WeylIso::check() const {
    Report rep;
    VarSpec ws = wspec_;
    RatFunc one = RatFunc::constant(ws, 1);
    auto Hd = [&](int i, int j) {
        return RatFunc::variable(ws, i) - RatFunc::variable(ws, j);
    };

    // (a) defining relations map to identities in the Weyl model
    {
        bool ok = true;
        std::string wit;
        auto record = [&](bool pass, const std::string& w) {
            if (!pass && ok) {
                ok = false;
                wit = w;
            }
        };
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                // weight relations
                WeylElement hx = image_h(i) * image_x(j) -
                                 image_x(j) * (image_h(i) + WeylElement::coefficient(n_, ws, i == j ? one : RatFunc(ws)));
                record(hx.is_zero(), "h x weight at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                WeylElement hd = image_h(i) * image_d(j) -
                                 image_d(j) * (image_h(i) - WeylElement::coefficient(n_, ws, i == j ? one : RatFunc(ws)));
                record(hd.is_zero(), "h d weight at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                if (i < j) {
                    WeylElement xx = image_x(i) * image_x(j) -
                                     (image_x(j) * image_x(i)).left_scaled((Hd(i, j) + one) / Hd(i, j));
                    record(xx.is_zero(), "x x at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                    WeylElement dd = image_d(i) * image_d(j) -
                                     (image_d(j) * image_d(i)).left_scaled((Hd(i, j) - one) / Hd(i, j));
                    record(dd.is_zero(), "d d at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
                if (i != j) {
                    RatFunc cf = one;
                    if (i > j) {
                        RatFunc w = Hd(i, j);
                        cf = w * (w - RatFunc::constant(ws, 2)) / ((w - one) * (w - one));
                    }
                    WeylElement xd = image_x(i) * image_d(j) - (image_d(j) * image_x(i)).left_scaled(cf);
                    record(xd.is_zero(), "x d at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                }
            }
            // diagonal relation
            WeylElement rhs = WeylElement::zero(n_, ws);
            for (int k = 0; k < n_; ++k) {
                RatFunc mik = k == i ? one : one / (one + Hd(k, i));
                rhs += (image_d(k) * image_x(k)).left_scaled(mik);
            }
            RatFunc sig = extend_spec(ctx_->sigma_site(i), ws);
            rhs -= WeylElement::coefficient(n_, ws, sig);
            record((image_x(i) * image_d(i) - rhs).is_zero(), "diagonal relation at " + std::to_string(i + 1));
        }
        rep.add("relations map into the Weyl model", ok, wit);
    }

    // (b) Weyl-side presentation maps into the ring
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n_ && ok; ++i) {
            Element xi = Element::gen_x(ctx_, i).times_coeff_right(
                RatFunc(psi_prime_poly(ctx_->spec(), n_, i)));
            for (int j = 0; j < n_ && ok; ++j) {
                Element xj = Element::gen_x(ctx_, j).times_coeff_right(
                    RatFunc(psi_prime_poly(ctx_->spec(), n_, j)));
                if (xi * xj != xj * xi) {
                    ok = false;
                    wit = "commutativity of twisted coordinates (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")";
                }
            }
            Element h = Element::coefficient(ctx_, RatFunc::variable(ctx_->spec(), i));
            if (h * xi != xi * (h + Element::one(ctx_))) {
                ok = false;
                wit = "weight of twisted coordinate " + std::to_string(i + 1);
            }
        }
        for (size_t k = 0; k < c_.size() && ok; ++k) {
            if (!verify_centrality(ctx_, c_[k], "c").all_pass()) {
                ok = false;
                wit = "centrality of c_" + std::to_string(k + 1);
            }
        }
        rep.add("Weyl presentation maps into the ring", ok, wit);
    }

    // (c) roundtrips fix the generators
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n_; ++i) {
            // Weyl side
            Element mx = Element::gen_x(ctx_, i).times_coeff_right(
                RatFunc(psi_prime_poly(ctx_->spec(), n_, i)));  // mu(X^i)
            if (mu_inverse(mx) != WeylElement::X(n_, ws, i)) {
                ok = false;
                wit = "mu^-1 mu X^" + std::to_string(i + 1);
            }
            // mu(D_i) = (psi'_i)^{-1} h_i (x^i)^{-1}
            RatFunc psip(psi_prime_poly(ctx_->spec(), n_, i));
            LocElement md = LocElement::coefficient(ctx_, psip.inverse() * RatFunc::variable(ctx_->spec(), i)) *
                            LocElement::gen_x(ctx_, i, -1);
            if (mu_inverse(md) != WeylElement::D(n_, ws, i)) {
                ok = false;
                wit = "mu^-1 mu D_" + std::to_string(i + 1);
            }
            // ring side
            if (mu_forward(image_x(i)) != LocElement::from_element(Element::gen_x(ctx_, i))) {
                ok = false;
                wit = "mu mu^-1 x^" + std::to_string(i + 1);
            }
            if (mu_forward(image_d(i)) != LocElement::from_element(Element::gen_d(ctx_, i))) {
                ok = false;
                wit = "mu mu^-1 d_" + std::to_string(i + 1);
            }
        }
        rep.add("roundtrips fix generators", ok, wit);
    }

    // (d) central elements match the labels
    {
        bool ok = true;
        std::string wit, value;
        for (int k = 0; k < n_; ++k) {
            WeylElement img = mu_inverse(c_[k]);
            WeylElement diff = img - WeylElement::a(n_, ws, k);
            auto cst = diff.as_coefficient();
            if (!cst || !cst->is_constant()) {
                ok = false;
                wit = "mu^-1 c_" + std::to_string(k + 1) + " - a_" + std::to_string(k + 1);
            } else {
                if (!value.empty()) value += ", ";
                value += to_string(cst->is_zero() ? Rat(0) : cst->constant_value());
            }
        }
        rep.add("central elements map to the labels (constants reported)", ok, wit, value);
    }

    // localization soundness
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < n_; ++i) {
            LocElement x = LocElement::gen_x(ctx_, i);
            LocElement xi = LocElement::gen_x(ctx_, i, -1);
            if (x * xi != LocElement::one(ctx_) || xi * x != LocElement::one(ctx_)) {
                ok = false;
                wit = "x^" + std::to_string(i + 1) + " inverse";
            }
            // coefficient shift through the inverse
            RatFunc h = RatFunc::variable(ctx_->spec(), i);
            LocElement lhs = LocElement::coefficient(ctx_, h) * xi;
            LocElement rhs = xi * LocElement::coefficient(ctx_, h - RatFunc::constant(ctx_->spec(), 1));
            if (lhs != rhs) {
                ok = false;
                wit = "weight through inverse at " + std::to_string(i + 1);
            }
            // twisted coordinates commute in the localized engine
            for (int j = 0; j < n_; ++j) {
                if (twisted_x(ctx_, i) * twisted_x(ctx_, j) != twisted_x(ctx_, j) * twisted_x(ctx_, i)) {
                    ok = false;
                    wit = "twisted commutativity";
                }
            }
            if (twisted_x(ctx_, i) * twisted_x_inverse(ctx_, i) != LocElement::one(ctx_)) {
                ok = false;
                wit = "twisted inverse at " + std::to_string(i + 1);
            }
        }
        rep.add("localization soundness", ok, wit);
    }
    return rep;
}

Report check_iso(int n, const SigmaSpec& sigma) { return WeylIso(n, sigma).check(); }

VarSpec laurent_value_spec(int n) { return VarSpec{0, 2 * n}; }

std::map<std::vector<int>, RatFunc> laurent_action(const WeylElement& w,
                                                   const std::vector<int>& j) {
    int n = w.n();
    VarSpec gs = laurent_value_spec(n);
    int wsz = w.spec().size();
    std::map<std::vector<int>, RatFunc> out;
    for (auto& [m, c] : w.terms()) {
        std::vector<std::pair<int, MPoly>> assign;
        for (int i = 0; i < n; ++i) {
            // H_i evaluates to gamma_i + j_i + 1 on the basis vector
            MPoly g = MPoly::variable(gs, n + i) + MPoly::constant(gs, Rat(j[i] + 1));
            assign.emplace_back(i, g);
        }
        for (int k = 0; k < n && n + k < wsz; ++k) assign.emplace_back(n + k, MPoly::variable(gs, k));
        for (int k = 0; k < n && 2 * n + k < wsz; ++k)
            assign.emplace_back(2 * n + k, MPoly::variable(gs, n + k));
        RatFunc val = c.subst(assign, gs);
        std::vector<int> target(n);
        for (int i = 0; i < n; ++i) target[i] = j[i] + m[i];
        auto it = out.find(target);
        if (it == out.end()) {
            if (!val.is_zero()) out[target] = val;
        } else {
            it->second = it->second + val;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

}  // namespace hdiff
