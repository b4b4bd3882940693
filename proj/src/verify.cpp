#include "dpz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "dpz/dp1.hpp"
#include "dpz/dp2.hpp"
#include "dpz/dp4.hpp"
#include "dpz/tables.hpp"
#include "dpz/weyl.hpp"

namespace dpz::verify {

namespace {

using nlohmann::json;
using tables::ExpectedRow;

long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string hist_str(const std::map<int, long>& h) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [o, c] : h) {
        if (!first) os << ", ";
        os << o << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

std::map<int, long> implied_hist(const ExpectedRow& row, int N) {
    std::map<int, long> out;
    for (auto& [o, c] : tables::implied_histogram(row, N)) out[o] = c;
    return out;
}

std::map<std::string, long> expected_counts(const ExpectedRow& row) {
    std::map<std::string, long> out;
    for (auto& cc : row.class_counts) out[cc.name] = cc.count;
    return out;
}

// seeded draw of a nonzero element
Fq::Elem draw_nonzero(const Fq& F, Rng& rng) {
    return static_cast<Fq::Elem>(1 + rng_below(rng, F.q() - 1));
}
Fq::Elem draw_any(const Fq& F, Rng& rng) { return static_cast<Fq::Elem>(rng_below(rng, F.q())); }

struct RowCheck {
    bool ok = true;
    std::string detail;
    std::string witness;
    long computed_order = 0;
    std::vector<std::pair<int, long>> histogram;
};

void append_result(Report& rep, const ExpectedRow& row, const RowCheck& rc) {
    RowResult r;
    r.name = row.name;
    r.expected_order = row.order;
    r.computed_order = rc.computed_order;
    for (auto& cc : row.class_counts) r.expected_counts.emplace_back(cc.name, cc.count);
    r.computed_histogram = rc.histogram;
    r.detail = rc.detail;
    r.witness = rc.witness;
    if (row.erratum && !rc.ok)
        r.status = "erratum";
    else
        r.status = rc.ok ? "match" : "mismatch";
    rep.rows.push_back(std::move(r));
}

void append_skip(Report& rep, const ExpectedRow& row, const std::string& why) {
    RowResult r;
    r.name = row.name;
    r.status = "skipped";
    r.detail = why;
    r.expected_order = row.order;
    rep.rows.push_back(std::move(r));
}

}  // namespace

bool Report::ok() const {
    for (auto& r : rows)
        if (r.status == "mismatch") return false;
    return true;
}

std::string Report::to_json() const {
    json j;
    j["table"] = table;
    j["characteristic"] = characteristic;
    j["seed"] = seed;
    j["elapsed_ms"] = elapsed_ms;
    j["rows"] = json::array();
    for (auto& r : rows) {
        json row;
        row["name"] = r.name;
        row["status"] = r.status;
        if (!r.detail.empty()) row["detail"] = r.detail;
        json expected = {{"order", r.expected_order}};
        if (!r.expected_counts.empty()) {
            json counts = json::object();
            for (auto& [k, v] : r.expected_counts) counts[k] = v;
            expected["counts"] = counts;
        }
        row["expected"] = expected;
        json computed = {{"order", r.computed_order}};
        if (!r.computed_histogram.empty()) {
            json hist = json::object();
            for (auto& [k, v] : r.computed_histogram) hist[std::to_string(k)] = v;
            computed["histogram"] = hist;
        }
        row["computed"] = computed;
        if (!r.witness.empty()) row["witness_data"] = r.witness;
        j["rows"].push_back(row);
    }
    return j.dump(2);
}

std::string Report::summary() const {
    std::ostringstream os;
    for (auto& r : rows) {
        os << table << " p=" << characteristic << "  " << r.name << ": " << r.status;
        if (r.status == "match" || r.status == "mismatch" || r.status == "erratum")
            os << " (expected " << r.expected_order << ", computed " << r.computed_order << ")";
        if (!r.detail.empty()) os << "  -- " << r.detail;
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Carter consistency

Report verify_carter_consistency() {
    long t0 = now_ms();
    Report rep;
    rep.table = "carter";
    auto& dict = tables::jordan_dictionary();
    for (auto& row : dict) {
        RowResult r;
        r.name = row.class_g + "/" + row.class_gbar;
        try {
            const auto& cg = weyl::class_by_name(row.class_g, 7);
            const auto& cb = weyl::class_by_name(row.class_gbar, 7);
            bool ok = true;
            std::ostringstream why;
            // printed orders match the class orders
            if (cg.order != row.order_g || cb.order != row.order_gbar) {
                ok = false;
                why << "order mismatch; ";
            }
            // traces are +-t
            int64_t tg = cg.trace(), tb = cb.trace();
            bool traces_ok = (row.trace_abs == 0) ? (tg == 0 && tb == 0)
                                                  : ((tg == row.trace_abs && tb == -row.trace_abs) ||
                                                     (tg == -row.trace_abs && tb == row.trace_abs));
            if (!traces_ok) {
                ok = false;
                why << "trace mismatch (" << tg << "," << tb << "); ";
            }
            // cp_gbar(t) = -cp_g(-t) and the pairing resolves uniquely
            const auto& mp = weyl::minus_pair_unique(cg, 7);
            if (mp.name != cb.name) {
                ok = false;
                why << "minus pair resolves to " << mp.name << "; ";
            }
            weyl::IntVec neg(cg.cp.size());
            for (size_t i = 0; i < neg.size(); ++i)
                neg[i] = ((i + 7) % 2) ? -cg.cp[i] : cg.cp[i];
            if (neg != cb.cp) {
                ok = false;
                why << "charpoly negation identity fails; ";
            }
            r.status = ok ? "match" : "mismatch";
            r.detail = why.str();
        } catch (const Error& e) {
            r.status = "mismatch";
            r.detail = e.what();
        }
        rep.rows.push_back(std::move(r));
    }
    // every class name used by the tables resolves, and the counts sum to the
    // group order
    auto check_table = [&](const std::vector<ExpectedRow>& table, int N, const char* label) {
        RowResult r;
        r.name = std::string(label) + " name resolution";
        r.status = "match";
        for (auto& row : table) {
            if (!row.same_as.empty()) continue;
            long total = 0;
            for (auto& cc : row.class_counts) {
                try {
                    weyl::class_by_name(cc.name, N);
                } catch (const Error&) {
                    r.status = "mismatch";
                    r.detail += row.name + ": unknown class " + cc.name + "; ";
                }
                total += cc.count;
            }
            if (total != row.order) {
                r.status = "mismatch";
                r.detail += row.name + " (" + row.chars + "): counts sum " +
                            std::to_string(total) + " != " + std::to_string(row.order) + "; ";
            }
        }
        rep.rows.push_back(std::move(r));
    };
    check_table(tables::table_dp2(), 7, "dp2");
    check_table(tables::table_dp1(), 8, "dp1");
    check_table(tables::table_dp4(), 5, "dp4");
    check_table(tables::table_cubics(), 6, "cubics");
    rep.elapsed_ms = now_ms() - t0;
    return rep;
}

// ---------------------------------------------------------------------------
// Degree 2

namespace {

// Compare a computed dp2 report against a row (order + full class counts).
RowCheck diff_dp2(const dp2::Dp2AutReport& got, const ExpectedRow& row) {
    RowCheck rc;
    rc.computed_order = static_cast<long>(got.surface_order);
    rc.histogram.assign(got.histogram.begin(), got.histogram.end());
    if (rc.computed_order != row.order) {
        rc.ok = false;
        rc.detail = "order mismatch";
        return rc;
    }
    if (!got.class_counts.empty()) {
        auto want = expected_counts(row);
        if (got.class_counts != want) {
            rc.ok = false;
            std::ostringstream os;
            os << "class count mismatch:";
            for (auto& [k, v] : want) {
                auto it = got.class_counts.find(k);
                long g = it == got.class_counts.end() ? 0 : it->second;
                if (g != v) os << " " << k << " expected " << v << " got " << g << ";";
            }
            for (auto& [k, v] : got.class_counts)
                if (!want.count(k)) os << " unexpected " << k << ":" << v << ";";
            rc.detail = os.str();
        }
    }
    return rc;
}

}  // namespace

static void verify_dp2_rows(Report& rep, uint32_t p, uint64_t seed, bool deep) {
    Rng rng(seed);
    const Fq& Fp = make_field(p, 1);
    std::map<std::string, std::string> outcome;  // for alias resolution

    for (auto& row : tables::table_dp2()) {
        if (!tables::char_applies(row.chars, p)) continue;
        if (!row.same_as.empty()) {
            RowResult r;
            r.name = row.name;
            auto it = outcome.find(row.same_as);
            r.status = it == outcome.end() ? "skipped" : it->second;
            r.detail = "(same as " + row.same_as + ")";
            outcome[row.name] = r.status;
            rep.rows.push_back(std::move(r));
            continue;
        }
        try {
            if (row.name == "I") {
                // p = 3: the Fermat model carries the full group over GF(9);
                // p != 3,7: the Klein quartic
                dp2::PlaneQuartic C = (p == 3) ? dp2::make_family(dp2::Family::Fermat, {}, Fp)
                                               : dp2::make_family(dp2::Family::Klein, {}, Fp);
                auto got = dp2::aut_curve(C, dp2::Strategy::Hybrid);
                RowCheck rc = diff_dp2(got, row);
                if (deep && p == 3) {
                    const Fq& F9 = make_field(3, 2);
                    MultiPoly f9 = mp_embed(C.f, get_embedding(Fp, F9));
                    auto ex = stabilizer_of_form(f9, SearchStrategy::Pruned);
                    if (ex.order() != 6048) {
                        rc.ok = false;
                        rc.detail += " deep PGL_3(9) search gave " + std::to_string(ex.order());
                    } else {
                        rc.witness += " deep PGL_3(9) exhaustive search confirms 6048;";
                    }
                }
                append_result(rep, row, rc);
                outcome[row.name] = rep.rows.back().status;
            } else if (row.name == "II" && p != 3) {
                auto got = dp2::aut_curve(dp2::make_family(dp2::Family::Fermat, {}, Fp),
                                          dp2::Strategy::Hybrid);
                append_result(rep, row, diff_dp2(got, row));
                outcome[row.name] = rep.rows.back().status;
            } else if (row.name == "IV") {
                // s4 family; p = 3 needs the parameter outside F_3
                const Fq& PF = (p == 3) ? make_field(3, 2) : Fp;
                RowCheck rc;
                int done = 0;
                for (int attempt = 0; attempt < 60 && done < 10; ++attempt) {
                    Fq::Elem a = draw_nonzero(PF, rng);
                    dp2::PlaneQuartic C{{}, {}, {}};
                    try {
                        C = dp2::make_family(dp2::Family::S4, {a}, PF);
                    } catch (const Error&) {
                        continue;  // printed side condition or singular draw
                    }
                    auto got = dp2::aut_curve(C, dp2::Strategy::Hybrid);
                    if (PF.q() <= 9) {
                        // independent upper bound over the parameter field
                        auto ex = stabilizer_of_form(C.f, PF.q() <= 5 ? SearchStrategy::Plain
                                                                      : SearchStrategy::Pruned);
                        if (ex.order() != 24) continue;  // degenerate: larger group
                    }
                    RowCheck one = diff_dp2(got, row);
                    if (!one.ok) {
                        rc = one;
                        break;
                    }
                    rc.computed_order = one.computed_order;
                    ++done;
                }
                if (done < 10 && rc.ok) {
                    rc.ok = false;
                    rc.detail = "not enough valid parameter draws";
                }
                rc.witness += " draws=" + std::to_string(done);
                append_result(rep, row, rc);
                outcome[row.name] = rep.rows.back().status;
            } else if (row.name == "VIII" && p == 3) {
                const Fq& F9 = make_field(3, 2);
                RowCheck rc;
                int done = 0;
                for (int attempt = 0; attempt < 20 && done < 10; ++attempt) {
                    Fq::Elem c = draw_nonzero(F9, rng);
                    auto C = dp2::make_family(dp2::Family::Heisenberg, {c}, F9);
                    auto got = dp2::aut_curve(C, dp2::Strategy::Hybrid);
                    RowCheck one = diff_dp2(got, row);
                    if (!one.ok) {
                        rc = one;
                        break;
                    }
                    rc.computed_order = one.computed_order;
                    ++done;
                }
                if (done < 10 && rc.ok) {
                    rc.ok = false;
                    rc.detail = "not enough valid parameter draws";
                }
                rc.witness += " draws=" + std::to_string(done);
                append_result(rep, row, rc);
            } else if (row.name == "IX" && p <= 7) {
                // s3 family with generic parameters; upper bound over the
                // parameter field via the pruned search
                const Fq& PF = (p == 3) ? make_field(3, 2) : Fp;
                RowCheck rc;
                int done = 0, degenerate = 0;
                for (int attempt = 0; attempt < 60 && done < 10; ++attempt) {
                    std::vector<Fq::Elem> ps = {draw_any(PF, rng), draw_any(PF, rng),
                                                draw_any(PF, rng), draw_any(PF, rng)};
                    dp2::PlaneQuartic C{{}, {}, {}};
                    try {
                        C = dp2::make_family(dp2::Family::S3, ps, PF);
                    } catch (const Error&) {
                        continue;
                    }
                    auto ex = stabilizer_of_form(C.f, PF.q() <= 5 ? SearchStrategy::Plain
                                                                  : SearchStrategy::Pruned);
                    if (ex.order() != 6) {
                        ++degenerate;  // coincidence with a larger row
                        continue;
                    }
                    auto got = dp2::aut_curve(C, dp2::Strategy::Hybrid);
                    RowCheck one = diff_dp2(got, row);
                    if (!one.ok) {
                        rc = one;
                        break;
                    }
                    rc.computed_order = one.computed_order;
                    ++done;
                }
                if (done < 10 && rc.ok) {
                    rc.ok = false;
                    rc.detail = "not enough valid parameter draws";
                }
                rc.witness +=
                    " draws=" + std::to_string(done) + " degenerate=" + std::to_string(degenerate);
                append_result(rep, row, rc);
            } else if (row.name == "XI" && p == 3) {
                RowCheck rc;
                int done = 0, degenerate = 0;
                for (int attempt = 0; attempt < 80 && done < 10; ++attempt) {
                    std::vector<Fq::Elem> ps(7);
                    for (auto& v : ps) v = draw_any(Fp, rng);
                    dp2::PlaneQuartic C{{}, {}, {}};
                    try {
                        C = dp2::make_family(dp2::Family::C3, ps, Fp);
                    } catch (const Error&) {
                        continue;
                    }
                    auto ex = stabilizer_of_form(C.f, SearchStrategy::Plain);
                    if (ex.order() != 3) {
                        ++degenerate;
                        continue;
                    }
                    auto got = dp2::aut_curve(C, dp2::Strategy::Hybrid);
                    RowCheck one = diff_dp2(got, row);
                    if (!one.ok) {
                        rc = one;
                        break;
                    }
                    rc.computed_order = one.computed_order;
                    ++done;
                }
                if (done < 10 && rc.ok) {
                    rc.ok = false;
                    rc.detail = "not enough valid parameter draws";
                }
                rc.witness +=
                    " draws=" + std::to_string(done) + " degenerate=" + std::to_string(degenerate);
                append_result(rep, row, rc);
            } else {
                append_skip(rep, row, "equation only cited from the literature");
            }
        } catch (const Error& e) {
            RowCheck rc;
            rc.ok = false;
            rc.detail = e.what();
            append_result(rep, row, rc);
        }
    }
}

// ---------------------------------------------------------------------------
// Degree 1

static void verify_dp1_branch(Report& rep, const ExpectedRow& row, dp1::Family1 fam,
                              const Fq& PF, int nparams, int want_draws,
                              const std::function<bool(const Fq&, std::vector<Fq::Elem>&)>& admit,
                              Rng& rng, const std::string& label) {
    RowCheck rc;
    auto want_hist = implied_hist(row, 8);
    uint32_t p = PF.p();
    // orders of the other rows at this characteristic: a "general parameter"
    // draw may degenerate onto one of them
    std::vector<long> other_orders;
    for (auto& r2 : tables::table_dp1())
        if (r2.same_as.empty() && tables::char_applies(r2.chars, p) && r2.order != row.order)
            other_orders.push_back(r2.order);
    int done = 0, degenerate = 0;
    for (int attempt = 0; attempt < 10 * std::max(1, want_draws) + 20 && done < std::max(1, want_draws);
         ++attempt) {
        std::vector<Fq::Elem> ps(nparams);
        for (auto& v : ps) v = draw_any(PF, rng);
        if (!admit(PF, ps)) continue;
        dp1::WeierstrassModel W;
        try {
            W = dp1::make_family1(fam, ps, PF);
        } catch (const Error&) {
            continue;  // rejected by the printed side conditions / singular
        }
        const Fq& K = dp1::family1_search_field(fam, ps, PF);
        auto got = dp1::aut_dp1(W, K);
        rc.computed_order = static_cast<long>(got.order);
        rc.histogram.assign(got.histogram.begin(), got.histogram.end());
        if (static_cast<long>(got.order) != row.order) {
            if (std::find(other_orders.begin(), other_orders.end(),
                          static_cast<long>(got.order)) != other_orders.end()) {
                ++degenerate;  // coincidence with another classified surface
                continue;
            }
            rc.ok = false;
            rc.detail = label + ": order " + std::to_string(got.order) + " outside the table";
            break;
        }
        if (got.histogram != want_hist) {
            rc.ok = false;
            rc.detail = label + ": histogram mismatch, computed " + hist_str(got.histogram) +
                        " vs table " + hist_str(want_hist);
            break;
        }
        if (!got.bertini_central) {
            rc.ok = false;
            rc.detail = label + ": bertini involution is not central";
            break;
        }
        ++done;
    }
    if (done < std::max(1, want_draws) && rc.ok) {
        rc.ok = false;
        rc.detail = label + ": not enough valid parameter draws";
    }
    rc.witness = label + " draws=" + std::to_string(done) +
                 (degenerate ? " degenerate=" + std::to_string(degenerate) : "");
    append_result(rep, row, rc);
}

static void verify_dp1_rows(Report& rep, uint32_t p, uint64_t seed) {
    Rng rng(seed);
    const Fq& Fp = make_field(p, 1);
    const Fq& F9 = make_field(3, 2);
    using dp1::Family1;

    std::map<std::string, std::string> outcome;
    for (auto& row : tables::table_dp1()) {
        if (!tables::char_applies(row.chars, p)) continue;
        if (!row.same_as.empty()) {
            RowResult r;
            r.name = row.name;
            auto it = outcome.find(row.same_as);
            r.status = it == outcome.end() ? "skipped" : it->second;
            r.detail = "(same as " + row.same_as + ")";
            rep.rows.push_back(std::move(r));
            continue;
        }
        try {
            if (row.name == "XIII" && p == 5) {
                verify_dp1_branch(rep, row, Family1::D10Char5, Fp, 1, 10,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) { return ps[0] != 0; },
                                  rng, "eqndp1D10");
            } else if (row.name == "XIII" && p == 3) {
                verify_dp1_branch(rep, row, Family1::C10Char3, Fp, 1, 10,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) { return ps[0] != 0; },
                                  rng, "c10 family");
            } else if (row.name == "I" && p == 5) {
                verify_dp1_branch(rep, row, Family1::Pgl25Char5, Fp, 0, 0,
                                  [](const Fq&, std::vector<Fq::Elem>&) { return true; }, rng,
                                  "eqndp1660");
            } else if (row.name == "I" && p != 3 && p != 5) {
                verify_dp1_branch(rep, row, Family1::QuarticPencil, Fp, 0, 0,
                                  [](const Fq&, std::vector<Fq::Elem>&) { return true; }, rng,
                                  "t0t1 pencil surface");
            } else if (row.name == "II" && p != 3 && p != 5) {
                verify_dp1_branch(rep, row, Family1::SexticFermat, Fp, 0, 0,
                                  [](const Fq&, std::vector<Fq::Elem>&) { return true; }, rng,
                                  "t0^6+t1^6 surface");
            } else if (row.name == "M" && p != 3) {
                verify_dp1_branch(rep, row, Family1::MChar, Fp, 1, 10,
                                  [](const Fq&, std::vector<Fq::Elem>&) { return true; }, rng,
                                  "m family");
            } else if (row.name == "M" && p == 3) {
                verify_dp1_branch(rep, row, Family1::J0TwoFibers, Fp, 3, 0,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) {
                                      ps[1] = 0;
                                      ps[2] = 0;
                                      return ps[0] != 0;
                                  },
                                  rng, "eq 3.2-2, b = c = 0");
            } else if (row.name == "IV" && p == 3) {
                verify_dp1_branch(rep, row, Family1::J0OneFiber, Fp, 2, 0,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) {
                                      ps[0] = 0;
                                      ps[1] = 0;
                                      return true;
                                  },
                                  rng, "eq 3.2-3, a = b = 0");
            } else if (row.name == "V" && p == 3) {
                verify_dp1_branch(rep, row, Family1::J0C2, F9, 2, 10,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) {
                                      ps[1] = ps[0];
                                      return ps[0] != 0;
                                  },
                                  rng, "eq 3.2-1, a = b");
            } else if (row.name == "XI" && p == 3) {
                // the printed condition a^2c^4 = b^4 splits into two sign
                // branches; the printed group C_2 x C_6 is the ac^2 = +b^2
                // branch. The other branch consistently computes the dicyclic
                // group 2.D_6 ({1,2:1,3:2,4:6,6:2}), not covered by the row.
                verify_dp1_branch(rep, row, Family1::J0TwoFibers, F9, 3, 10,
                                  [](const Fq& F, std::vector<Fq::Elem>& ps) {
                                      if (ps[0] == 0 || ps[1] == 0 || ps[2] == 0) return false;
                                      Fq::Elem lhs = F.mul(ps[0], F.mul(ps[2], ps[2]));
                                      return lhs == F.mul(ps[1], ps[1]);
                                  },
                                  rng, "eq 3.2-2, ac^2 = b^2");
                {
                    // document the other sign branch as a flagged erratum
                    RowCheck rc2;
                    std::map<int, long> seen;
                    int done2 = 0;
                    for (int attempt = 0; attempt < 120 && done2 < 5; ++attempt) {
                        std::vector<Fq::Elem> ps = {draw_nonzero(F9, rng), draw_nonzero(F9, rng),
                                                    draw_nonzero(F9, rng)};
                        Fq::Elem lhs = F9.mul(ps[0], F9.mul(ps[2], ps[2]));
                        if (lhs != F9.neg(F9.mul(ps[1], ps[1]))) continue;
                        dp1::WeierstrassModel W;
                        try {
                            W = dp1::make_family1(Family1::J0TwoFibers, ps, F9);
                        } catch (const Error&) {
                            continue;
                        }
                        auto got = dp1::aut_dp1(W, dp1::family1_search_field(
                                                        Family1::J0TwoFibers, ps, F9));
                        seen = got.histogram;
                        rc2.computed_order = static_cast<long>(got.order);
                        ++done2;
                    }
                    RowResult r2;
                    r2.name = "XI (ac^2 = -b^2 subfamily)";
                    r2.status = "erratum";
                    r2.expected_order = row.order;
                    r2.computed_order = rc2.computed_order;
                    r2.detail =
                        "printed row claims C_2 x C_6 under a^2c^4 = b^4, but the ac^2 = -b^2 "
                        "branch computes the dicyclic group with histogram " +
                        hist_str(seen) + " on " + std::to_string(done2) + " draws";
                    rep.rows.push_back(std::move(r2));
                }
            } else if (row.name == "XVII" && p == 3) {
                // two printed equations feed this row
                verify_dp1_branch(rep, row, Family1::J0TwoFibers, F9, 3, 10,
                                  [](const Fq& F, std::vector<Fq::Elem>& ps) {
                                      if (ps[0] == 0 || ps[1] == 0 || ps[2] == 0) return false;
                                      Fq::Elem lhs = F.mul(F.mul(ps[0], ps[0]), F.pow(ps[2], 4));
                                      return lhs != F.pow(ps[1], 4);
                                  },
                                  rng, "eq 3.2-2 generic");
                verify_dp1_branch(rep, row, Family1::J0OneFiber, F9, 2, 10,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) { return ps[1] != 0; },
                                  rng, "eq 3.2-3, b != 0");
            } else if (row.name == "XVIII" && p == 3) {
                verify_dp1_branch(rep, row, Family1::JnzGeneric, F9, 3, 10,
                                  [](const Fq& F, std::vector<Fq::Elem>& ps) {
                                      return ps[0] != 0 && ps[1] != 0 && ps[2] != 0 &&
                                             F.mul(ps[0], ps[2]) != 1;
                                  },
                                  rng, "eq 3.1-1");
                verify_dp1_branch(rep, row, Family1::J0C2, F9, 2, 10,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) {
                                      return ps[0] != 0 && ps[1] != 0 && ps[0] != ps[1];
                                  },
                                  rng, "eq 3.2-1, a != b");
            } else if (row.name == "XVIII'" && p == 3) {
                verify_dp1_branch(rep, row, Family1::Jnz33, Fp, 2, 6,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) { return ps[1] != 0; },
                                  rng, "eq 3.1-1b");
            } else if (row.name == "XIX'" && p == 3) {
                verify_dp1_branch(rep, row, Family1::J0OneFiber, F9, 2, 10,
                                  [](const Fq&, std::vector<Fq::Elem>& ps) {
                                      ps[1] = 0;
                                      return ps[0] != 0;
                                  },
                                  rng, "eq 3.2-3, b = 0, a != 0");
            } else {
                append_skip(rep, row, "equation only cited from the literature");
            }
            outcome[row.name] = rep.rows.back().status;
        } catch (const Error& e) {
            RowCheck rc;
            rc.ok = false;
            rc.detail = e.what();
            append_result(rep, row, rc);
        }
    }
}

// ---------------------------------------------------------------------------
// Degree 4

namespace {

Fq::Elem quadratic_root(const Fq& F, int64_t c1, int64_t c0) {
    // a root of x^2 + c1 x + c0, if any
    for (uint32_t x = 0; x < F.q(); ++x)
        if (F.add(F.add(F.mul(x, x), F.mul(F.from_int(c1), x)), F.from_int(c0)) == 0) return x;
    fail(Err::NoMatch, "quadratic has no root here");
}

const Fq& field_with_root(uint32_t p, int64_t c1, int64_t c0) {
    for (uint32_t k = 1; k <= 2; ++k) {
        const Fq& F = make_field(p, k);
        for (uint32_t x = 0; x < F.q(); ++x)
            if (F.add(F.add(F.mul(x, x), F.mul(F.from_int(c1), x)), F.from_int(c0)) == 0) return F;
    }
    fail(Err::Internal, "no quadratic splitting field within degree 2");
}

}  // namespace

static void verify_dp4_rows(Report& rep, uint32_t p, uint64_t seed) {
    Rng rng(seed);
    std::map<std::string, std::string> outcome;
    // the generic rows need a field where 5-point configurations can be
    // generic; p^k >= 25 or so
    uint32_t gk = p == 3 ? 3 : 2;
    const Fq& GF = make_field(p, gk);

    for (auto& row : tables::table_dp4()) {
        if (!tables::char_applies(row.chars, p)) continue;
        if (!row.same_as.empty()) {
            RowResult r;
            r.name = row.name;
            auto it = outcome.find(row.same_as);
            r.status = it == outcome.end() ? "skipped" : it->second;
            r.detail = "(same as " + row.same_as + ")";
            rep.rows.push_back(std::move(r));
            continue;
        }
        RowCheck rc;
        try {
            if (row.name == "(phi,phi)") {
                const Fq& F = field_with_root(p, -1, -1);
                Fq::Elem phi = quadratic_root(F, -1, -1);
                auto rep4 = dp4::aut_dp4(dp4::make_dp4(F, phi, phi));
                rc.computed_order = static_cast<long>(rep4.order);
                rc.ok = rc.computed_order == row.order;
                rc.witness = "phi over GF(" + std::to_string(p) + "^" + std::to_string(F.k()) + ")";
            } else if (row.name == "(zeta3,zeta3)") {
                const Fq& F = field_with_root(p, 1, 1);
                Fq::Elem z = quadratic_root(F, 1, 1);
                auto rep4 = dp4::aut_dp4(dp4::make_dp4(F, z, z));
                rc.computed_order = static_cast<long>(rep4.order);
                rc.ok = rc.computed_order == row.order;
            } else if (row.name == "(i,i)") {
                const Fq& F = field_with_root(p, 0, 1);
                Fq::Elem i = quadratic_root(F, 0, 1);
                auto rep4 = dp4::aut_dp4(dp4::make_dp4(F, i, i));
                rc.computed_order = static_cast<long>(rep4.order);
                rc.ok = rc.computed_order == row.order;
            } else if (row.name == "(a,a)") {
                // diagonal draws; draws landing on a configuration equivalent
                // to one of the special rows are degenerate and must match
                // that row's order
                std::vector<long> special_orders;
                for (auto& r2 : tables::table_dp4())
                    if (r2.same_as.empty() && tables::char_applies(r2.chars, p) &&
                        r2.name != "general" && r2.name != "(a,a)")
                        special_orders.push_back(r2.order);
                int done = 0, degenerate = 0;
                for (int attempt = 0; attempt < 80 && done < 10; ++attempt) {
                    Fq::Elem a = draw_any(GF, rng);
                    dp4::Dp4Model M;
                    try {
                        M = dp4::make_dp4(GF, a, a);
                    } catch (const Error&) {
                        continue;
                    }
                    auto rep4 = dp4::aut_dp4(M);
                    long order = static_cast<long>(rep4.order);
                    if (order != row.order) {
                        if (std::find(special_orders.begin(), special_orders.end(), order) ==
                            special_orders.end()) {
                            rc.ok = false;
                            rc.detail = "draw a=" + GF.to_string(a) + " gave order " +
                                        std::to_string(order) + " outside the table";
                            break;
                        }
                        ++degenerate;
                        continue;
                    }
                    rc.computed_order = order;
                    ++done;
                }
                if (done < 5 && rc.ok) {
                    rc.ok = false;
                    rc.detail = "not enough valid draws";
                }
                rc.witness =
                    "draws=" + std::to_string(done) + " degenerate=" + std::to_string(degenerate);
            } else if (row.name == "general") {
                // generic pairs have trivial stabilizer; draws landing on a
                // special configuration must match one of the special rows
                int done = 0, degenerate = 0;
                std::vector<long> special_orders;
                for (auto& r2 : tables::table_dp4())
                    if (r2.same_as.empty() && tables::char_applies(r2.chars, p) &&
                        r2.name != "general")
                        special_orders.push_back(r2.order);
                for (int attempt = 0; attempt < 80 && done < 10; ++attempt) {
                    Fq::Elem a = draw_any(GF, rng), b = draw_any(GF, rng);
                    dp4::Dp4Model M;
                    try {
                        M = dp4::make_dp4(GF, a, b);
                    } catch (const Error&) {
                        continue;
                    }
                    auto rep4 = dp4::aut_dp4(M);
                    long order = static_cast<long>(rep4.order);
                    if (order != row.order) {
                        // degenerate draw: must at least divide into the known
                        // special orders
                        if (std::find(special_orders.begin(), special_orders.end(), order) ==
                            special_orders.end()) {
                            rc.ok = false;
                            rc.detail = "draw gave order " + std::to_string(order) +
                                        " outside the table";
                            break;
                        }
                        ++degenerate;
                        continue;
                    }
                    rc.computed_order = order;
                    ++done;
                }
                if (done < 3 && rc.ok) {
                    rc.ok = false;
                    rc.detail = "too few generic draws reached the trivial stabilizer";
                }
                rc.witness = "draws=" + std::to_string(done) +
                             " degenerate=" + std::to_string(degenerate) + " over GF(" +
                             std::to_string(p) + "^" + std::to_string(gk) + ")";
            } else {
                append_skip(rep, row, "no instantiation");
                continue;
            }
        } catch (const Error& e) {
            rc.ok = false;
            rc.detail = e.what();
        }
        append_result(rep, row, rc);
        outcome[row.name] = rep.rows.back().status;
    }
}

Report verify_table(const std::string& which, uint32_t p, uint64_t seed, bool deep) {
    long t0 = now_ms();
    Report rep;
    rep.table = which;
    rep.characteristic = p;
    rep.seed = seed;
    if (p == 2) fail(Err::EvenCharacteristic, "odd characteristic only");
    if (which == "dp2")
        verify_dp2_rows(rep, p, seed, deep);
    else if (which == "dp1")
        verify_dp1_rows(rep, p, seed);
    else if (which == "dp4")
        verify_dp4_rows(rep, p, seed);
    else
        fail(Err::BadParameters, "unknown table " + which);
    rep.elapsed_ms = now_ms() - t0;
    return rep;
}

}  // namespace dpz::verify
