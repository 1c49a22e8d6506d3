#include "leonard/parray.hpp"

#include <sstream>

#include "leonard/recurrence.hpp"

namespace leonard {

bool ParameterArray::operator==(const ParameterArray& o) const {
    return d == o.d && same_ctx(ctx, o.ctx) && theta == o.theta && theta_star == o.theta_star &&
           varphi == o.varphi && phi == o.phi;
}

std::string ValidationReport::summary() const {
    if (violations.empty()) return "valid";
    std::ostringstream out;
    for (size_t k = 0; k < violations.size(); ++k) {
        if (k) out << "; ";
        out << violations[k].condition;
        if (violations[k].index >= 0) out << "[i=" << violations[k].index << "]";
        out << ": " << violations[k].detail;
    }
    return out.str();
}

namespace {

void check_structure(const ParameterArray& pa, ValidationReport& report) {
    auto bad = [&](const std::string& msg) {
        report.violations.push_back({"structure", -1, msg});
    };
    if (!pa.ctx) {
        bad("missing field context");
        return;
    }
    if (pa.d < 0) bad("negative diameter");
    size_t n = static_cast<size_t>(pa.d) + 1;
    if (pa.theta.size() != n) bad("theta must have d+1 entries");
    if (pa.theta_star.size() != n) bad("theta_star must have d+1 entries");
    if (pa.varphi.size() != n - 1) bad("varphi must have d entries");
    if (pa.phi.size() != n - 1) bad("phi must have d entries");
    for (const auto* list : {&pa.theta, &pa.theta_star, &pa.varphi, &pa.phi})
        for (const auto& e : *list)
            if (!e.valid() || !same_ctx(e.ctx(), pa.ctx)) bad("entry from a different field");
}

} // namespace

ValidationReport validate(const ParameterArray& pa) {
    ValidationReport report;
    check_structure(pa, report);
    if (!report.violations.empty())
        throw Error(Errc::StructuralError, report.summary());
    const int d = pa.d;
    if (d == 0) return report; // vacuously valid

    // PA1: mutually distinct eigenvalues, both sequences.
    auto pa1 = [&](const std::vector<FieldElem>& seq, const char* which) {
        for (int i = 0; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                if (seq[i] == seq[j])
                    report.violations.push_back(
                        {"PA1", j,
                         std::string(which) + "_" + std::to_string(i) + " equals " + which + "_" +
                             std::to_string(j)});
    };
    pa1(pa.theta, "theta");
    pa1(pa.theta_star, "theta_star");

    // PA2: split sequences nowhere zero.
    for (int i = 1; i <= d; ++i) {
        if (pa.varphi[i - 1].is_zero())
            report.violations.push_back({"PA2", i, "varphi_" + std::to_string(i) + " is zero"});
        if (pa.phi[i - 1].is_zero())
            report.violations.push_back({"PA2", i, "phi_" + std::to_string(i) + " is zero"});
    }

    // PA3/PA4 need the partial sums, whose denominator is theta_0 - theta_d;
    // when that vanishes PA1 already reported it, so stop here.
    if (pa.theta[0] == pa.theta[d]) return report;

    FieldElem den_inv = (pa.theta[0] - pa.theta[d]).inverse();
    FieldElem sum = pa.ctx->zero();
    for (int i = 1; i <= d; ++i) {
        sum = sum + (pa.theta[i - 1] - pa.theta[d - i + 1]) * den_inv;
        FieldElem expect3 =
            pa.phi[0] * sum + (pa.theta_star[i] - pa.theta_star[0]) * (pa.theta[i - 1] - pa.theta[d]);
        if (!(pa.varphi[i - 1] == expect3))
            report.violations.push_back(
                {"PA3", i, "varphi_" + std::to_string(i) + " = " + pa.varphi[i - 1].str() +
                               ", expected " + expect3.str()});
        FieldElem expect4 = pa.varphi[0] * sum + (pa.theta_star[i] - pa.theta_star[0]) *
                                                     (pa.theta[d - i + 1] - pa.theta[0]);
        if (!(pa.phi[i - 1] == expect4))
            report.violations.push_back({"PA4", i, "phi_" + std::to_string(i) + " = " +
                                                       pa.phi[i - 1].str() + ", expected " +
                                                       expect4.str()});
    }

    // PA5: the two second-order ratios agree and are independent of i
    // (vacuous for d <= 2).
    std::optional<FieldElem> common;
    for (int i = 2; i <= d - 1; ++i) {
        FieldElem den = pa.theta[i - 1] - pa.theta[i];
        FieldElem dens = pa.theta_star[i - 1] - pa.theta_star[i];
        if (den.is_zero() || dens.is_zero()) continue; // PA1 already covers this
        FieldElem r = (pa.theta[i - 2] - pa.theta[i + 1]) / den;
        FieldElem rs = (pa.theta_star[i - 2] - pa.theta_star[i + 1]) / dens;
        if (!(r == rs))
            report.violations.push_back(
                {"PA5", i, "eigenvalue and dual eigenvalue ratios differ"});
        if (!common)
            common = r;
        else if (!(*common == r))
            report.violations.push_back({"PA5", i, "ratio depends on i"});
    }
    return report;
}

void require_valid(const ParameterArray& pa) {
    auto report = validate(pa);
    if (!report.valid()) throw Error(Errc::InvalidParameterArray, report.summary());
}

D4Element D4Element::parse(const std::string& text) {
    D4Element e;
    if (text.empty()) return e;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, '.')) {
        if (item == "down")
            e.append(D4Generator::down);
        else if (item == "Down")
            e.append(D4Generator::Down);
        else if (item == "star")
            e.append(D4Generator::star);
        else
            throw Error(Errc::ParseError, "unknown generator '" + item + "'");
    }
    return e;
}

void D4Element::append(D4Generator g) {
    // each generator is an involution; adjacent equal letters cancel
    if (!word.empty() && word.back() == g)
        word.pop_back();
    else
        word.push_back(g);
}

std::string D4Element::str() const {
    std::string out;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) out += ".";
        switch (word[k]) {
            case D4Generator::down: out += "down"; break;
            case D4Generator::Down: out += "Down"; break;
            case D4Generator::star: out += "star"; break;
        }
    }
    return out;
}

namespace {

ParameterArray apply_generator(const ParameterArray& pa, D4Generator g) {
    const int d = pa.d;
    ParameterArray out;
    out.ctx = pa.ctx;
    out.d = d;
    auto rev = [&](const std::vector<FieldElem>& v) {
        return std::vector<FieldElem>(v.rbegin(), v.rend());
    };
    switch (g) {
        case D4Generator::Down:
            out.theta = rev(pa.theta);
            out.theta_star = pa.theta_star;
            out.varphi = pa.phi;
            out.phi = pa.varphi;
            break;
        case D4Generator::down:
            out.theta = pa.theta;
            out.theta_star = rev(pa.theta_star);
            out.varphi = rev(pa.phi);
            out.phi = rev(pa.varphi);
            break;
        case D4Generator::star:
            out.theta = pa.theta_star;
            out.theta_star = pa.theta;
            out.varphi = pa.varphi;
            out.phi = rev(pa.phi);
            break;
    }
    return out;
}

} // namespace

ParameterArray transform_d4(const ParameterArray& pa, const D4Element& g) {
    require_valid(pa);
    ParameterArray out = pa;
    for (D4Generator gen : g.word) out = apply_generator(out, gen);
    auto report = validate(out);
    if (!report.valid())
        throw Error(Errc::PostValidationFailed,
                    "transform broke validity: " + report.summary());
    return out;
}

ParameterArray complete_from_phi1(const FieldElem& varphi1, const std::vector<FieldElem>& theta,
                                  const std::vector<FieldElem>& theta_star) {
    if (theta.size() != theta_star.size() || theta.size() < 2)
        throw Error(Errc::PrereqFailure, "need matching eigenvalue lists with d >= 1");
    const int d = static_cast<int>(theta.size()) - 1;
    const FieldCtxPtr& ctx = varphi1.ctx();

    ParameterArray probe;
    probe.ctx = ctx;
    probe.d = d;
    probe.theta = theta;
    probe.theta_star = theta_star;
    probe.varphi.assign(d, ctx->zero());
    probe.phi.assign(d, ctx->zero());
    // PA1 and PA5 are prerequisites on the eigenvalue data alone.
    auto pre = validate(probe);
    for (const auto& v : pre.violations)
        if (v.condition == "PA1" || v.condition == "PA5")
            throw Error(Errc::PrereqFailure, v.condition + ": " + v.detail);

    // phi_1 from the first PA3 equation (the partial sum at i = 1 is 1).
    FieldElem phi1 = varphi1 - (theta_star[1] - theta_star[0]) * (theta[0] - theta[d]);

    ParameterArray out;
    out.ctx = ctx;
    out.d = d;
    out.theta = theta;
    out.theta_star = theta_star;
    FieldElem den_inv = (theta[0] - theta[d]).inverse();
    FieldElem sum = ctx->zero();
    for (int i = 1; i <= d; ++i) {
        sum = sum + (theta[i - 1] - theta[d - i + 1]) * den_inv;
        out.varphi.push_back(phi1 * sum + (theta_star[i] - theta_star[0]) * (theta[i - 1] - theta[d]));
        out.phi.push_back(varphi1 * sum +
                          (theta_star[i] - theta_star[0]) * (theta[d - i + 1] - theta[0]));
    }

    auto report = validate(out);
    if (!report.valid()) {
        for (const auto& v : report.violations)
            if (v.condition == "PA2")
                throw Error(Errc::PA2Failure, report.summary());
        throw Error(Errc::PrereqFailure, report.summary());
    }
    return out;
}

std::vector<FieldElem> vartheta_of(const ParameterArray& pa) {
    const int d = pa.d;
    std::vector<FieldElem> out;
    out.reserve(d + 2);
    out.push_back(pa.ctx->zero());
    for (int i = 1; i <= d; ++i)
        out.push_back(pa.varphi[i - 1] -
                      (pa.theta_star[i] - pa.theta_star[0]) * (pa.theta[i - 1] - pa.theta[d]));
    out.push_back(pa.ctx->zero());
    return out;
}

} // namespace leonard
