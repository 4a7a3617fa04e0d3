#include "bcwb/model.hpp"

#include <set>

namespace bcwb {

Form LieModel::d_generator(const Generator& g) const {
    if (g.index < 1 || g.index > n)
        throw Error(ErrorKind::IndexOutOfRange, "generator index outside the model");
    return g.barred ? conjugate(d_holo(g.index)) : d_holo(g.index);
}

Form LieModel::d(const Form& f) const {
    Form out(n);
    for (const auto& [mono, coeff] : f.terms()) {
        std::vector<Generator> fs = mono.factors();
        for (std::size_t r = 0; r < fs.size(); ++r) {
            // prefix and suffix stay canonical, so only the Leibniz sign enters
            Monomial prefix, suffix;
            for (std::size_t a = 0; a < r; ++a) {
                std::uint32_t bit = 1u << (fs[a].index - 1);
                (fs[a].barred ? prefix.anti : prefix.holo) |= bit;
            }
            for (std::size_t a = r + 1; a < fs.size(); ++a) {
                std::uint32_t bit = 1u << (fs[a].index - 1);
                (fs[a].barred ? suffix.anti : suffix.holo) |= bit;
            }
            GaussianRational sign((r % 2) ? -1 : 1);
            Form piece = wedge(wedge(Form(n, prefix), d_generator(fs[r])), Form(n, suffix));
            out += (sign * coeff) * piece;
        }
    }
    return out;
}

bool LieModel::is_abelian() const {
    for (const Form& f : structure)
        if (!f.is_zero()) return false;
    return true;
}

DifferentialPair differential_matrices(const LieModel& m, int s, int t) {
    if (s < 0 || t < 0 || s > m.n || t > m.n)
        throw Error(ErrorKind::RangeError, "differential_matrices: bidegree outside 0..n");
    std::vector<Monomial> src = bidegree_basis(m.n, s, t);
    std::vector<Monomial> dst_del = bidegree_basis(m.n, s + 1, t);
    std::vector<Monomial> dst_delbar = bidegree_basis(m.n, s, t + 1);
    std::map<Monomial, Eigen::Index> del_index, delbar_index;
    for (std::size_t i = 0; i < dst_del.size(); ++i) del_index[dst_del[i]] = static_cast<Eigen::Index>(i);
    for (std::size_t i = 0; i < dst_delbar.size(); ++i) delbar_index[dst_delbar[i]] = static_cast<Eigen::Index>(i);

    DifferentialPair out;
    out.del = MatrixQI::Constant(static_cast<Eigen::Index>(dst_del.size()),
                                 static_cast<Eigen::Index>(src.size()), GaussianRational(0));
    out.delbar = MatrixQI::Constant(static_cast<Eigen::Index>(dst_delbar.size()),
                                    static_cast<Eigen::Index>(src.size()), GaussianRational(0));
    for (std::size_t j = 0; j < src.size(); ++j) {
        Form df = m.d(Form(m.n, src[j]));
        for (const auto& [mono, c] : df.terms()) {
            if (mono.s() == s + 1 && mono.t() == t) {
                out.del(del_index.at(mono), static_cast<Eigen::Index>(j)) = c;
            } else if (mono.s() == s && mono.t() == t + 1) {
                out.delbar(delbar_index.at(mono), static_cast<Eigen::Index>(j)) = c;
            } else {
                throw Error(ErrorKind::IntegrabilityError,
                            "differential leaves the (s+1,t)+(s,t+1) window at " + to_dsl_string(mono));
            }
        }
    }
    return out;
}

ValidationReport validate_model(const LieModel& m) {
    ValidationReport report;
    report.abelian = m.is_abelian();

    for (int s = 0; s <= m.n; ++s) {
        for (int t = 0; t <= m.n; ++t) {
            for (const Monomial& mono : bidegree_basis(m.n, s, t)) {
                Form f(m.n, mono);
                Form dd = m.d(m.d(f));
                if (dd.is_zero()) continue;
                report.d_squared_ok = false;
                Form del2 = dd.component(s + 2, t);
                Form mixed = dd.component(s + 1, t + 1);
                Form delbar2 = dd.component(s, t + 2);
                if (!del2.is_zero())
                    report.failures.push_back("del^2 != 0 on " + to_dsl_string(mono) + ": " + to_dsl_string(del2));
                if (!mixed.is_zero())
                    report.failures.push_back("del*delbar + delbar*del != 0 on " + to_dsl_string(mono) + ": " +
                                              to_dsl_string(mixed));
                if (!delbar2.is_zero())
                    report.failures.push_back("delbar^2 != 0 on " + to_dsl_string(mono) + ": " +
                                              to_dsl_string(delbar2));
            }
        }
    }

    // Ascending filtration test: collect generators whose differential lands
    // in the exterior square of what is already collected.
    std::set<std::pair<int, bool>> have;
    bool grew = true;
    auto collected = [&](const Form& df) {
        for (const auto& [mono, c] : df.terms())
            for (const Generator& g : mono.factors())
                if (!have.count({g.index, g.barred})) return false;
        return true;
    };
    while (grew) {
        grew = false;
        for (int k = 1; k <= m.n; ++k) {
            for (bool barred : {false, true}) {
                if (have.count({k, barred})) continue;
                if (collected(m.d_generator({k, barred}))) {
                    have.insert({k, barred});
                    grew = true;
                }
            }
        }
    }
    report.nilpotent = static_cast<int>(have.size()) == 2 * m.n;
    return report;
}

}  // namespace bcwb
