#include "defw/codim1_report.hpp"
#include "defw/derivations.hpp"
#include "defw/projectors.hpp"
#include "defw/text.hpp"

#include <sstream>

namespace defw {

namespace {

const AlgebraContext kCtx = unbounded(1, Variant::W);

Element el(const std::string& s) { return parse_element(kCtx, s); }

bool same_mod_ideal(const Element& a, const Element& b) { return is_in_ideal(a - b); }

QMatrix rows_of(const std::vector<std::vector<Rational>>& r) {
    QMatrix m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.front().size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) m(i, j) = r[i][j];
    return m;
}

}  // namespace

const std::vector<ProjectorEntry>& printed_projector_images() {
    static const std::vector<ProjectorEntry> table = {
        {2, "h[1,2]", "0"},
        {2, "h[1,0]*h[1,2]", "0"},
        {2, "h[1,2]*c[1,0]", "-h[1,1]*c[1,1]"},
        {2, "h[1,0]*h[1,2]*c[1,0]", "-h[1,0]*h[1,1]*c[1,1]"},
        {2, "c[1,2]", "0"},
        {2, "h[1,0]*c[1,2]", "-h[1,1]*c[1,1]"},
        {2, "c[1,2]*c[1,0]", "c[1,2]*c[1,0]"},
        {2, "h[1,0]*c[1,2]*c[1,0]", "h[1,0]*c[1,2]*c[1,0]"},
        {2, "h[1,1]*c[1,1]", "h[1,1]*c[1,1]"},
        {2, "h[1,0]*h[1,1]*c[1,1]", "h[1,0]*h[1,1]*c[1,1]"},
        {2, "c[1,1]*c[1,1]", "c[1,1]*c[1,1]"},
        {2, "h[1,0]*c[1,1]*c[1,1]", "h[1,0]*c[1,1]*c[1,1]"},
        {3, "h[1,3]", "0"},
        {3, "h[1,3]*c[1,0]", "-1/2*h[1,2]*c[1,1] + 1/2*h[1,1]*c[1,2]"},
        {3, "h[1,0]*h[1,3]*c[1,0]", "-h[1,1]*h[1,2]*c[1,0] - 1/2*h[1,0]*h[1,2]*c[1,1] + 1/2*h[1,0]*h[1,1]*c[1,2]"},
        {3, "c[1,3]", "0"},
        {3, "h[1,0]*c[1,3]", "-1/2*h[1,1]*c[1,2] + 1/2*h[1,2]*c[1,1]"},
        {3, "h[1,0]*c[1,3]*c[1,0]", "-1/2*h[1,1]*c[1,2]*c[1,0] + h[1,1]*c[1,1]*c[1,1] + 1/2*h[1,2]*c[1,1]*c[1,0]"},
        {3, "h[1,1]*h[1,2]", "h[1,1]*h[1,2]"},
        {3, "h[1,1]*h[1,2]*c[1,0]", "h[1,1]*h[1,2]*c[1,0]"},
        {3, "h[1,0]*h[1,1]*h[1,2]", "h[1,0]*h[1,1]*h[1,2]"},
        {3, "h[1,0]*h[1,1]*h[1,2]*c[1,0]", "h[1,0]*h[1,1]*h[1,2]*c[1,0]"},
        {3, "h[1,1]*c[1,2]", "-1/2*h[1,2]*c[1,1] + 1/2*h[1,1]*c[1,2]"},
        {3, "h[1,1]*c[1,2]*c[1,0]", "h[1,1]*c[1,2]*c[1,0]"},
        {3, "h[1,1]*c[1,1]*c[1,1]", "h[1,1]*c[1,1]*c[1,1]"},
        {3, "h[1,0]*c[1,2]*c[1,1]", "-1/2*h[1,1]*c[1,1]*c[1,1]"},
        {3, "h[1,0]*c[1,1]*c[1,1]*c[1,1]", "h[1,0]*c[1,1]*c[1,1]*c[1,1]"},
        {4, "h[1,4]", "0"},
        {4, "h[1,4]*c[1,0]", "-1/5*h[1,3]*c[1,1] + 3/5*h[1,2]*c[1,2] - 1/5*h[1,1]*c[1,3]"},
        {4, "h[1,0]*h[1,4]", "0"},
        {4, "h[1,0]*h[1,4]*c[1,0]", "-1/5*h[1,0]*h[1,3]*c[1,1] + 9/5*h[1,1]*h[1,2]*c[1,1] + 3/5*h[1,0]*h[1,2]*c[1,2] - 1/5*h[1,0]*h[1,1]*c[1,3]"},
        {4, "h[1,1]*h[1,3]", "0"},
        {4, "h[1,1]*h[1,3]*c[1,0]", "-h[1,1]*h[1,2]*c[1,1]"},
        {4, "h[1,0]*h[1,1]*h[1,3]", "0"},
        {4, "h[1,0]*h[1,1]*h[1,3]*c[1,0]", "-h[1,0]*h[1,1]*h[1,2]*c[1,1]"},
        {4, "h[1,3]*c[1,1]", "1/5*h[1,3]*c[1,1] - 3/5*h[1,2]*c[1,2] + 1/5*h[1,1]*c[1,3]"},
        {4, "h[1,0]*h[1,3]*c[1,1]", "1/5*h[1,0]*h[1,3]*c[1,1] - 4/5*h[1,1]*h[1,2]*c[1,1] - 3/5*h[1,0]*h[1,2]*c[1,2] + 1/5*h[1,0]*h[1,1]*c[1,3]"},
        {4, "h[1,1]*h[1,2]*c[1,1]", "h[1,1]*h[1,2]*c[1,1]"},
        {4, "h[1,0]*h[1,1]*h[1,2]*c[1,1]", "h[1,0]*h[1,1]*h[1,2]*c[1,1]"},
        {4, "h[1,2]*c[1,2]", "-1/5*h[1,3]*c[1,1] + 3/5*h[1,2]*c[1,2] - 1/5*h[1,1]*c[1,3]"},
        {4, "h[1,2]*c[1,2]*c[1,0]", "-1/5*h[1,3]*c[1,0]*c[1,1] + 3/5*h[1,2]*c[1,0]*c[1,2] - 1/15*h[1,2]*c[1,1]*c[1,1] - 1/5*h[1,1]*c[1,0]*c[1,3] + 1/15*h[1,1]*c[1,1]*c[1,2]"},
        {4, "h[1,2]*c[1,1]*c[1,1]", "2/3*h[1,2]*c[1,1]*c[1,1] - 2/3*h[1,1]*c[1,1]*c[1,2]"},
        {4, "h[1,0]*h[1,2]*c[1,2]", "-1/5*h[1,0]*h[1,3]*c[1,1] + 3/5*h[1,0]*h[1,2]*c[1,2] - 1/5*h[1,1]*h[1,2]*c[1,1] - 1/5*h[1,0]*h[1,1]*c[1,3]"},
        {4, "h[1,0]*h[1,2]*c[1,0]*c[1,2]", "1/3*h[1,0]*h[1,2]*c[1,0]*c[1,2] - 1/3*h[1,0]*h[1,2]*c[1,1]*c[1,1] - 1/3*h[1,0]*h[1,1]*c[1,3]*c[1,0] - 1/3*h[1,0]*h[1,1]*c[1,1]*c[1,2]"},
        {4, "h[1,0]*h[1,2]*c[1,1]*c[1,1]", "2/3*h[1,0]*h[1,2]*c[1,1]*c[1,1] - 2/3*h[1,0]*h[1,1]*c[1,1]*c[1,2]"},
        {4, "h[1,1]*c[1,2]*c[1,1]", "-1/3*h[1,2]*c[1,1]*c[1,1] + 1/3*h[1,1]*c[1,1]*c[1,2]"},
        {4, "h[1,0]*h[1,1]*c[1,1]*c[1,2]", "-1/3*h[1,0]*h[1,2]*c[1,1]*c[1,1] + 1/3*h[1,0]*h[1,1]*c[1,1]*c[1,2]"},
        {4, "h[1,0]*c[1,2]*c[1,2]", "2/15*h[1,2]*c[1,1]*c[1,1] - 2/15*h[1,1]*c[1,1]*c[1,2] + 3/5*h[1,0]*c[1,2]*c[1,2] - 2/5*h[1,0]*c[1,1]*c[1,3]"},
        {4, "h[1,0]*c[1,1]*c[1,1]*c[1,2]", "-1/3*h[1,1]*c[1,1]*c[1,1]*c[1,1]"},
        {4, "h[1,0]*c[1,0]*c[1,2]*c[1,2]", "h[1,0]*c[1,0]*c[1,2]*c[1,2]"},
    };
    return table;
}

std::vector<Element> printed_w_basis() {
    return {el("h[1,0]*h[1,1]*c[1,0]*c[1,4]"), el("h[1,0]*h[1,1]*c[1,1]*c[1,3]"),
            el("h[1,0]*h[1,2]*c[1,0]*c[1,3]"), el("h[1,0]*h[1,3]*c[1,0]*c[1,2]"),
            el("h[1,1]*h[1,2]*c[1,0]*c[1,2]")};
}

namespace {

json generators(bool& ok) {
    auto h = cohomology(kCtx, 3, 0);
    Element gv = el("h[1,0]*c[1,0]");
    auto gv_class = h->class_coords(gv);
    bool a = h->dim() == 1 && gv_class && !gv_class->isZero();
    auto f = F_lambda(kCtx, 0, 4, 1);
    Element flk = el("h[1,0]*h[1,1]*c[1,0]");
    auto flk_class = f->class_coords(flk);
    bool b = f->dim() == 1 && flk_class && !flk_class->isZero();
    ok = ok && a && b;
    json reps = json::array();
    for (const auto& r : h->representatives()) reps.push_back(to_json(r));
    json freps = json::array();
    for (const auto& r : f->representatives()) freps.push_back(to_json(r));
    return {{"H_3_0", {{"dim", h->dim()}, {"basis", reps}, {"GV_nonzero", a}}},
            {"F0_4_1", {{"dim", f->dim()}, {"basis", freps}, {"FLK_nonzero", b}}}};
}

json projector_tables(bool& ok) {
    json out = json::array();
    for (const auto& e : printed_projector_images()) {
        Element x = el(e.input);
        Element printed = el(e.printed);
        Element engine = reduce(projector_p1(e.k, x));
        bool match = same_mod_ideal(engine, printed);
        ok = ok && match;
        out.push_back({{"k", e.k},
                       {"input", to_text(x)},
                       {"printed", to_text(printed)},
                       {"engine", to_json(engine)},
                       {"match", match}});
    }
    return out;
}

json order4_candidates(bool& ok) {
    const std::vector<std::string> cands = {
        "h[1,3]*c[1,1] - 3*h[1,2]*c[1,2] + h[1,1]*c[1,3]",
        "h[1,0]*h[1,3]*c[1,1] - 3*h[1,0]*h[1,2]*c[1,2] + h[1,0]*h[1,1]*c[1,3]",
        "h[1,1]*h[1,2]*c[1,1]",
        "h[1,0]*h[1,1]*h[1,2]*c[1,1]",
        "-3*h[1,2]*c[1,0]*c[1,2] + h[1,1]*c[1,0]*c[1,3]",
        "h[1,2]*c[1,1]^2 - h[1,1]*c[1,1]*c[1,2]",
        "-3*h[1,0]*h[1,2]*c[1,0]*c[1,2] + h[1,0]*h[1,1]*c[1,0]*c[1,3]",
        "h[1,0]*h[1,2]*c[1,1]^2 - h[1,0]*h[1,1]*c[1,1]*c[1,2]",
        "3*h[1,0]*c[1,2]^2 - 2*h[1,0]*c[1,1]*c[1,3]",
    };
    const std::vector<bool> printed_exact = {false, false, false, false, true, true, true, true, true};
    json out = json::array();
    for (std::size_t i = 0; i < cands.size(); ++i) {
        Element x = el(cands[i]);
        const int n = *x.degree();
        QuotientPiece piece(kCtx, n, 4, std::nullopt, {});
        QVector v = piece.coords(x);
        bool in_e0 = (delta_sigma_matrix(piece) * v).isZero();
        auto f = F_lambda(kCtx, 0, n, 4);
        bool closed = f->is_cocycle(v);
        bool exact = closed && f->is_coboundary(v);
        if (printed_exact[i]) ok = ok && in_e0 && exact;
        if (i == 1 || i == 2) ok = ok && in_e0 && !closed;
        json row = {{"element", to_text(x)},
                    {"in_E0", in_e0},
                    {"closed", closed},
                    {"exact", exact},
                    {"printed_exact", printed_exact[i]}};
        if (!closed) row["d_image"] = to_text(reduce(d(x)));
        out.push_back(row);
    }
    return out;
}

json type22_order5(bool& ok) {
    const Type t22{2, 2};
    auto f = F_lambda(kCtx, 0, 6, 5, t22);
    const QuotientPiece& piece = f->cochains();
    auto pb = printed_w_basis();
    // columns: printed basis in engine coordinates
    QMatrix P(piece.dim(), static_cast<Eigen::Index>(pb.size()));
    for (std::size_t j = 0; j < pb.size(); ++j) P.col(static_cast<Eigen::Index>(j)) = piece.coords(pb[j]);
    auto Pinv = inverse(P);
    bool basis_ok = piece.dim() == 5 && Pinv.has_value();
    ok = ok && basis_ok;
    if (!basis_ok) return {{"error", "printed basis is not a basis of the quotient piece"}};
    auto printed_coords = [&](const Element& x) -> QVector { return *Pinv * piece.coords(x); };

    const std::vector<std::vector<Rational>> printed_C = {
        {ratio(-1, 14), ratio(-15, 14), ratio(-9, 14), ratio(9, 14), ratio(9, 14)},
        {ratio(5, 28), ratio(33, 28), ratio(3, 28), ratio(-3, 28), ratio(-3, 28)},
        {ratio(-3, 28), ratio(-3, 28), ratio(15, 28), ratio(-15, 28), ratio(-15, 28)},
        {ratio(1, 14), ratio(1, 14), ratio(-5, 14), ratio(5, 14), ratio(-9, 14)},
        {0, 0, 0, 0, 1}};
    json cvec = json::array();
    QMatrix Cm(5, 5);
    for (std::size_t i = 0; i < pb.size(); ++i) {
        QVector c = printed_coords(reduce(projector_p1(5, pb[i])));
        Cm.row(static_cast<Eigen::Index>(i)) = c.transpose();
        QVector want = rows_of({printed_C[i]}).row(0).transpose();
        bool match = c == want;
        ok = ok && match;
        cvec.push_back({{"input", to_text(pb[i])}, {"engine", to_json(c)}, {"match", match}});
    }

    QMatrix Ze = (*Pinv * f->cocycles()).transpose();
    QMatrix Zp = rows_of({{1, 6, 0, 0, 0}, {0, 1, 1, -1, 0}, {0, 0, 0, 0, 1}});
    auto z_e_from_p = row_combination(Zp, Ze);
    auto z_p_from_e = row_combination(Ze, Zp);
    bool z_ok = Ze.rows() == 3 && z_e_from_p && z_p_from_e && rank(Cm) == 3 &&
                row_combination(Zp, Cm).has_value();

    QMatrix Be = (*Pinv * f->coboundaries().matrix().transpose()).transpose();
    QMatrix Bp = rows_of({{1, 0, -6, 6, 0}, {0, 5, 5, -5, -3}});
    auto b_e_from_p = row_combination(Bp, Be);
    auto b_p_from_e = row_combination(Be, Bp);
    bool b_ok = Be.rows() == 2 && b_e_from_p && b_p_from_e;

    Element gen = el("h[1,1]*h[1,2]*c[1,0]*c[1,2]");
    auto gen_class = f->class_coords(gen);
    bool v_ok = f->dim() == 1 && gen_class && !gen_class->isZero();
    ok = ok && z_ok && b_ok && v_ok;

    // images of the type (3,1) monomials under p, before d
    json bimg = json::array();
    for (const char* s : {"h[1,0]*h[1,1]*h[1,4]*c[1,0]", "h[1,0]*h[1,2]*h[1,3]*c[1,0]",
                          "h[1,0]*h[1,1]*h[1,3]*c[1,1]", "h[1,0]*h[1,1]*h[1,2]*c[1,2]"}) {
        Element x = el(s);
        bimg.push_back({{"input", to_text(x)}, {"p_image", to_text(reduce(projector_p1(5, x)))}});
    }
    json w_gen = json::array();
    std::size_t free_count = 0;
    for (const auto& m : enumerate_basis(kCtx, 6, 5, t22)) {
        ++free_count;
        bool killed = false;
        const auto& f4 = m.factors();
        for (std::size_t a = 0; a + 1 < f4.size(); ++a)
            if (f4[a].kind == Kind::C && f4[a + 1].kind == Kind::C && f4[a].order == 0 && f4[a + 1].order <= 1)
                killed = true;
        if (!killed) w_gen.push_back(to_text(m));
    }

    json jp = json::array();
    for (const auto& e : pb) jp.push_back(to_text(e));
    json je = json::array();
    for (const auto& m : piece.basis()) je.push_back(to_text(m));
    return {{"free_type22_monomials", free_count},
            {"monomials_without_trivial_factor", w_gen},
            {"engine_basis", je},
            {"printed_basis", jp},
            {"printed_to_engine", to_json(P)},
            {"C_vectors", cvec},
            {"Z", {{"engine_rows", to_json(Ze)},
                   {"printed_rows", to_json(Zp)},
                   {"engine_from_printed", z_e_from_p ? to_json(*z_e_from_p) : json(nullptr)},
                   {"printed_from_engine", z_p_from_e ? to_json(*z_p_from_e) : json(nullptr)},
                   {"equal_spans", z_ok}}},
            {"B", {{"engine_rows", to_json(Be)},
                   {"printed_rows", to_json(Bp)},
                   {"engine_from_printed", b_e_from_p ? to_json(*b_e_from_p) : json(nullptr)},
                   {"printed_from_engine", b_p_from_e ? to_json(*b_p_from_e) : json(nullptr)},
                   {"equal_spans", b_ok}}},
            {"type31_p_images", bimg},
            {"V", {{"dim", f->dim()},
                   {"generator", to_text(gen)},
                   {"generator_nonzero", v_ok},
                   {"representatives", [&] {
                        json r = json::array();
                        for (const auto& x : f->representatives()) r.push_back(to_json(x));
                        return r;
                    }()}}}};
}

json gv_products(bool& ok) {
    Element gv = el("h[1,0]*c[1,0]");
    const std::vector<std::string> printed = {
        "2*h[1,1]*c[1,0]", "2*h[1,2]*c[1,0] + 2*h[1,1]*c[1,1]",
        "2*h[1,3]*c[1,0] + 4*h[1,2]*c[1,1] + 2*h[1,1]*c[1,2]",
        "2*h[1,4]*c[1,0] + 6*h[1,3]*c[1,1] + 6*h[1,2]*c[1,2] + 2*h[1,1]*c[1,3]"};
    std::vector<Element> dk{gv};
    json derivs = json::array();
    for (int k = 1; k <= 4; ++k) {
        dk.push_back(delta(dk.back()));
        bool match = class_of(reduce(dk[k]), 3, k).coords == class_of(el(printed[k - 1]), 3, k).coords;
        ok = ok && match;
        derivs.push_back({{"k", k}, {"engine", to_text(reduce(dk[k]))}, {"printed", printed[k - 1]}, {"match", match}});
    }
    auto cls = [](const Element& x, int n, int k) { return class_of(reduce(x), n, k); };
    Element p14 = dk[1] * dk[4];
    Element p23 = dk[2] * dk[3];
    Element p13 = dk[1] * dk[3];
    Element gen = el("h[1,1]*h[1,2]*c[1,0]*c[1,2]");
    auto c14 = cls(p14, 6, 5), c23 = cls(p23, 6, 5), c13 = cls(p13, 6, 4), cg = cls(gen, 6, 5);
    // coefficient of [gen] in a class, if proportional
    auto multiple = [&](const QVector& v) -> std::optional<Rational> {
        for (Eigen::Index i = 0; i < cg.coords.size(); ++i)
            if (cg.coords[i] != 0) {
                Rational t = v[i] / cg.coords[i];
                if (v == QVector(t * cg.coords)) return t;
                return std::nullopt;
            }
        return std::nullopt;
    };
    auto m14 = multiple(c14.coords), m23 = multiple(c23.coords);
    auto as_json = [](const std::optional<Rational>& t) { return t ? json(to_string(*t)) : json(nullptr); };
    bool r14 = !c14.is_zero() && m14 && *m14 == 4;
    bool r23 = c23.coords == QVector(-c14.coords);
    bool r23_printed = m23 && *m23 == -4;
    bool r13 = c13.is_zero();
    bool rs = class_sigma(c23).is_zero();
    // delta sigma vanishes on both classes
    bool in_f0 = cls(delta(sigma(p14)), 6, 5).is_zero() && cls(delta(sigma(p23)), 6, 5).is_zero();
    ok = ok && r14 && r23 && r23_printed && r13 && rs && in_f0;
    auto row = [](const char* lhs, const Element& v, const char* claim, bool holds) {
        return json{{"lhs", lhs}, {"value", to_text(reduce(v))}, {"claim", claim}, {"holds", holds}};
    };
    return {{"derivatives_of_GV", derivs},
            {"generator_class_nonzero", !cg.is_zero()},
            {"delta1_delta4_multiple_of_generator", as_json(m14)},
            {"delta2_delta3_multiple_of_generator", as_json(m23)},
            {"products",
             json::array({row("delta(GV)*delta^4(GV)", p14, "4*[h[1,1]*h[1,2]*c[1,0]*c[1,2]], nonzero", r14),
                          row("delta^2(GV)*delta^3(GV)", p23, "4*[h[1,2]*h[1,1]*c[1,0]*c[1,2]]", r23_printed),
                          row("delta^2(GV)*delta^3(GV)", p23, "-delta(GV)*delta^4(GV) in cohomology", r23),
                          row("delta(GV)*delta^3(GV)", p13, "zero class", r13),
                          row("sigma(delta^2(GV)*delta^3(GV))", sigma(p23), "zero class", rs)})},
            {"products_in_F0", in_f0}};
}

json degree7_class(bool& ok) {
    Element w = el("h[1,0]*h[1,1]*h[1,2]*c[1,0]*c[1,2]");
    auto f = F_lambda(kCtx, 0, 7, 5);
    auto c = f->class_coords(w);
    auto h = cohomology(kCtx, 7, 5);
    auto hc = h->class_coords(w);
    bool sigma_zero = is_in_ideal(sigma(w));
    QuotientPiece t41(kCtx, 6, 5, Type{4, 1}, {});
    bool nonzero = c && !c->isZero() && hc && !hc->isZero();
    ok = ok && nonzero;
    return {{"element", to_text(w)},
            {"sigma_in_ideal", sigma_zero},
            {"type41_order5_dim", t41.dim()},
            {"F0_dim", f->dim()},
            {"nonzero", nonzero}};
}

json cubic_monomials(bool& ok) {
    json rows = json::array();
    bool all_full = true, some_fail = false;
    IdealOptions cap2{2};
    for (int i = 0; i <= 5; ++i)
        for (int j = i; i + j <= 5; ++j)
            for (int k = j; i + j + k <= 5; ++k) {
                Element x = el("c[1," + std::to_string(i) + "]*c[1," + std::to_string(j) + "]*c[1," + std::to_string(k) + "]");
                bool full = is_in_ideal(x);
                bool r5 = is_in_ideal(with_context(x, truncated(1, 5)));
                bool capped = is_in_ideal(x, cap2);
                all_full = all_full && full && r5;
                some_fail = some_fail || !capped;
                rows.push_back({{"monomial", to_text(x)}, {"member", full}, {"member_r5", r5}, {"member_depth2", capped}});
            }
    ok = ok && all_full && some_fail;
    json closed = json::array();
    for (int r = 2; r <= 5; ++r) {
        Element x = with_context(el("h[1,1]*h[1,2]*c[1,0]*c[1,2]"), truncated(1, r));
        closed.push_back({{"r", r}, {"closed", is_in_ideal(d(x))}});
    }
    return {{"table", rows}, {"all_members", all_full}, {"some_fail_at_depth2", some_fail},
            {"h1h2c0c2_closed_by_r", closed}};
}

}  // namespace

json codim1_report() {
    bool ok = true;
    json r;
    r["generators"] = generators(ok);
    json dims = json::array();
    for (int k = 2; k <= 4; ++k)
        for (int n = 0; n <= 8; ++n) {
            auto f = F_lambda(kCtx, 0, n, k);
            ok = ok && f->dim() == 0;
            dims.push_back({{"order", k}, {"degree", n}, {"dim", f->dim()}});
        }
    r["F0_dims_orders_2_to_4"] = dims;
    r["projector_tables"] = projector_tables(ok);
    r["order4_candidates"] = order4_candidates(ok);
    r["type22_order5"] = type22_order5(ok);
    r["gv_products"] = gv_products(ok);
    r["degree7_class"] = degree7_class(ok);
    r["cubic_monomials"] = cubic_monomials(ok);
    r["ok"] = ok;
    return r;
}

namespace {

std::string yes(const json& b) { return b.get<bool>() ? "yes" : "NO"; }

std::string vec_text(const json& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
    return s + ")";
}

}  // namespace

std::string codim1_markdown(const json& r) {
    std::ostringstream o;
    o << "# Codimension one report\n\n";
    o << "Overall: " << (r["ok"].get<bool>() ? "all comparisons hold" : "SOME COMPARISONS FAIL") << "\n\n";

    const auto& t1 = r["generators"];
    o << "## Generators of F_{0,0} and F_{0,1}\n\n";
    o << "- H at degree 3, order 0: dim " << t1["H_3_0"]["dim"] << ", basis";
    for (const auto& b : t1["H_3_0"]["basis"]) o << " `" << b["text"].get<std::string>() << "`";
    o << "; GV nonzero: " << yes(t1["H_3_0"]["GV_nonzero"]) << "\n";
    o << "- F_0 at degree 4, order 1: dim " << t1["F0_4_1"]["dim"] << ", basis";
    for (const auto& b : t1["F0_4_1"]["basis"]) o << " `" << b["text"].get<std::string>() << "`";
    o << "; FLK nonzero: " << yes(t1["F0_4_1"]["FLK_nonzero"]) << "\n\n";

    o << "## F_{0,k} for k = 2, 3, 4\n\n| order | degree | dim |\n|---|---|---|\n";
    for (const auto& d : r["F0_dims_orders_2_to_4"]) o << "| " << d["order"] << " | " << d["degree"] << " | " << d["dim"] << " |\n";

    o << "\n## Projector images p_{1,k}\n\n| k | input | printed | engine (reduced) | match |\n|---|---|---|---|---|\n";
    for (const auto& e : r["projector_tables"])
        o << "| " << e["k"] << " | `" << e["input"].get<std::string>() << "` | `" << e["printed"].get<std::string>()
          << "` | `" << e["engine"]["text"].get<std::string>() << "` | " << yes(e["match"]) << " |\n";

    o << "\n## Order 4 candidates\n\n| element | in E_0 | closed | exact | printed exact |\n|---|---|---|---|---|\n";
    for (const auto& e : r["order4_candidates"])
        o << "| `" << e["element"].get<std::string>() << "` | " << yes(e["in_E0"]) << " | " << yes(e["closed"])
          << " | " << yes(e["exact"]) << " | " << yes(e["printed_exact"]) << " |\n";

    const auto& t7 = r["type22_order5"];
    o << "\n## Type (2,2), degree 6, order 5\n\n";
    if (t7.contains("error")) {
        o << t7["error"].get<std::string>() << "\n";
    } else {
        o << "- free monomials of type (2,2): " << t7["free_type22_monomials"] << "; without a c[1,0]^2 or c[1,0]*c[1,1] factor: "
          << t7["monomials_without_trivial_factor"].size() << "\n";
        o << "- quotient basis (printed order):";
        for (const auto& b : t7["printed_basis"]) o << " `" << b.get<std::string>() << "`";
        o << "\n\n| input | C(p(input)) | match |\n|---|---|---|\n";
        for (const auto& c : t7["C_vectors"])
            o << "| `" << c["input"].get<std::string>() << "` | " << vec_text(c["engine"]) << " | " << yes(c["match"]) << " |\n";
        for (const char* key : {"Z", "B"}) {
            const auto& s = t7[key];
            o << "\n" << key << " engine rows:";
            for (const auto& row : s["engine_rows"]) o << " " << vec_text(row);
            o << "; printed rows:";
            for (const auto& row : s["printed_rows"]) o << " " << vec_text(row);
            o << "; equal spans: " << yes(s["equal_spans"]) << "\n";
        }
        o << "\np images of the type (3,1) monomials:\n\n";
        for (const auto& b : t7["type31_p_images"])
            o << "- `" << b["input"].get<std::string>() << "` -> `" << b["p_image"].get<std::string>() << "`\n";
        o << "\nV: dim " << t7["V"]["dim"] << ", generated by `" << t7["V"]["generator"].get<std::string>()
          << "`: " << yes(t7["V"]["generator_nonzero"]) << "\n";
    }

    const auto& t8 = r["gv_products"];
    o << "\n## Products of derivatives of GV\n\n";
    for (const auto& dgv : t8["derivatives_of_GV"])
        o << "- delta^" << dgv["k"] << "(GV) = `" << dgv["engine"].get<std::string>() << "` (" << yes(dgv["match"]) << ")\n";
    auto mult = [](const json& v) { return v.is_null() ? std::string("not proportional") : v.get<std::string>(); };
    o << "\n- [delta(GV)*delta^4(GV)] = " << mult(t8["delta1_delta4_multiple_of_generator"])
      << " * [h[1,1]*h[1,2]*c[1,0]*c[1,2]]\n";
    o << "- [delta^2(GV)*delta^3(GV)] = " << mult(t8["delta2_delta3_multiple_of_generator"])
      << " * [h[1,1]*h[1,2]*c[1,0]*c[1,2]]\n";
    o << "- both classes in F_0: " << yes(t8["products_in_F0"]) << "\n";
    o << "\n| product | reduced value | claim | holds |\n|---|---|---|---|\n";
    for (const auto& p : t8["products"])
        o << "| " << p["lhs"].get<std::string>() << " | `" << p["value"].get<std::string>() << "` | "
          << p["claim"].get<std::string>() << " | " << yes(p["holds"]) << " |\n";

    const auto& p2 = r["degree7_class"];
    o << "\n## Degree 7 class\n\n`" << p2["element"].get<std::string>() << "`: sigma in ideal " << yes(p2["sigma_in_ideal"])
      << ", type (4,1) order 5 cochains " << p2["type41_order5_dim"] << ", nonzero " << yes(p2["nonzero"]) << "\n";

    const auto& l8 = r["cubic_monomials"];
    o << "\n## Cubic monomials\n\n| monomial | member | member (r = 5) | member (depth 2) |\n|---|---|---|---|\n";
    for (const auto& row : l8["table"])
        o << "| `" << row["monomial"].get<std::string>() << "` | " << yes(row["member"]) << " | " << yes(row["member_r5"])
          << " | " << yes(row["member_depth2"]) << " |\n";
    o << "\nh[1,1]*h[1,2]*c[1,0]*c[1,2] closed in the r-truncated algebra:";
    for (const auto& c : l8["h1h2c0c2_closed_by_r"]) o << " r=" << c["r"] << ": " << yes(c["closed"]) << ";";
    o << "\n";
    return o.str();
}

}  // namespace defw
