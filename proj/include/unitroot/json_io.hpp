#pragma once

#include <json.hpp>

#include "unitroot/diffop.hpp"
#include "unitroot/formal_log.hpp"
#include "unitroot/grouplaw.hpp"
#include "unitroot/hassewitt.hpp"
#include "unitroot/oracle.hpp"
#include "unitroot/polytope.hpp"

namespace unitroot {

using Json = nlohmann::ordered_json;

// {"d": d, "terms": [[coeff_string, [e1,...,ed]], ...]}
Json poly_to_json(const PolyZ& f);
PolyZ poly_from_json(const Json& j);

Json expvec_to_json(const ExpVec& e, int d);

// {"vertices": [...], "facets": [{"normal": [...], "offset": k}],
//  "interior_points": [...], "N": n}
Json polytope_report_json(const NewtonPolytope& P);

Json hypothesis_report_json(const HypothesisReport& r);

// {"p": p, "precision": M, "labels": [...], "entries": [["..."]]}
Json matrix_to_json(const PadicMatrix& m);

Json beta_table_json(const BetaTable& t);
std::string beta_table_tsv(const BetaTable& t);

// [{"v": [...], "w": [...], "nu": n, "coeff": "num/den"}, ...]
Json log_series_json(const BetaTable& t, int D);

// [{"component": [...], "monomial": {"x": [...], "y": [...]}, "coeff": "..."}]
Json group_law_json(const GroupLaw& F);
Json integrality_report_json(const GroupLaw& F, const IntegralityReport& rep);

// [{"tau_pow": k, "delta_pow": j, "coeff": "..."}]
Json operator_to_json(const EulerOperator& op);

Json series1d_json(const PowerSeries1D& g);

Json crosscheck_report_json(const CrosscheckReport& r);

Json limit_result_json(const LimitResult& r);

Json congruence1_json(const CongruenceReport1& r);
Json congruence2_json(const CongruenceReport2& r);

}  // namespace unitroot
