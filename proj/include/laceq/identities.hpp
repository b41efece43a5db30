#pragma once

#include <optional>
#include <string>

#include "laceq/lacing.hpp"
#include "laceq/quiver.hpp"
#include "laceq/series.hpp"

namespace laceq {

/// Result of one exact identity comparison. `equal` holds exactly when
/// `first_mismatch` is absent.
struct IdentityReport {
    struct Mismatch {
        int zdeg = 0;
        int qdeg = 0;
        Integer lhs_coeff;
        Integer rhs_coeff;
    };

    std::string identity;
    DimVector dims;
    std::string w_text;        // one-line permutation tuple, when applicable
    std::string orientation;   // orientation word, when applicable
    int trunc_q = 0;
    int trunc_z = 0;
    TruncatedSeries lhs{0, 0};
    TruncatedSeries rhs{0, 0};
    bool equal = false;
    std::optional<Mismatch> first_mismatch;
    long long class_count = 0;
};

/// prod_k 1/(q)_{d(k)}: the multipartition generating series.
TruncatedSeries lhs_product(const DimVector& d, int trunc_q);

/// prod_k 1/(z;q)_{d(k)}: q marks boxes, z marks lengths.
TruncatedSeries lhs_product_enriched(const DimVector& d, int trunc_q, int trunc_z);

/*
 * Right-hand side of the main identity:
 *   sum_eta q^{r_w(eta)} prod_k ( 1/(q)_{t_k^k} prod_{i<k} [t_i^k+s_i^k over s_i^k]_q ),
 * summed over all classes with the given dimension vector.
 */
TruncatedSeries rhs_main(const DimVector& d, const PermSeq& w, int trunc_q);

/// One class's contribution to rhs_main (a table row).
TruncatedSeries rhs_main_summand(const LaceClass& eta, const PermSeq& w, int trunc_q);

/// Cancelled form: sum_eta q^{r_w(eta)} prod_I 1/(q)_{m_I(eta)}.
TruncatedSeries rhs_cancel(const DimVector& d, const PermSeq& w, int trunc_q);

/*
 * Reineke-type right-hand side: sum_eta q^{codim(eta)} prod_I 1/(q)_{m_I(eta)}
 * with the codimension taken from the condition-strand formula. When
 * crosscheck_oracle is set, every class's codimension is also recomputed with
 * the linear-algebra Ext oracle; disagreement throws std::logic_error.
 */
TruncatedSeries rhs_reineke(const DimVector& d, const OrientationWord& q, int trunc_q,
                            bool crosscheck_oracle = true);

/*
 * Enriched right-hand side, z marking the total number of partition rows.
 * The k-th factor is 1/(z;q)_{t_k^k} times, for each band i < k (reading the
 * glued diagram), either
 *   z^{s_{w(i)}^k} [t_{w(i)}^k+s_{w(i)}^k over s_{w(i)}^k]_q
 * when the columns to the band's right are nonempty (every band row is then a
 * real row), or box_series(s_{w(i)}^k, t_{w(i)}^k) when they are empty (only
 * the band's own cells produce rows). With no empty-column bands the factor
 * collapses to z^{leftstrands(k-1)} 1/(z;q)_{t_k^k} prod [..]_q.
 */
TruncatedSeries rhs_enriched(const DimVector& d, const PermSeq& w, int trunc_q, int trunc_z);

/// First retained coefficient where the two series differ, scanning keys in
/// (z-degree, q-degree) order over the common window.
std::optional<IdentityReport::Mismatch> first_mismatch(const TruncatedSeries& lhs,
                                                       const TruncatedSeries& rhs);

IdentityReport verify_main(const DimVector& d, const PermSeq& w, int trunc_q);
IdentityReport verify_cancel(const DimVector& d, const PermSeq& w, int trunc_q);
IdentityReport verify_reineke(const DimVector& d, const OrientationWord& q, int trunc_q,
                              bool crosscheck_oracle = true);
IdentityReport verify_enriched(const DimVector& d, const PermSeq& w, int trunc_q, int trunc_z);

/*
 * Dispatcher for the CLI: name is one of main | cancel | reineke | enriched.
 * main, cancel and enriched need a permutation tuple (given directly or as
 * w_Q of an orientation); reineke needs an orientation. Throws
 * std::invalid_argument on a bad combination.
 */
IdentityReport verify_identity(const std::string& name, const DimVector& d,
                               const std::optional<PermSeq>& w,
                               const std::optional<OrientationWord>& orientation, int trunc_q,
                               int trunc_z);

}  // namespace laceq
