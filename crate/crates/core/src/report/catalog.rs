//! Stable claim identifiers with their source anchors and formula-level quotes.

use serde::Serialize;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    pub quote: &'static str,
}

const fn info(id: &'static str, anchor: &'static str, quote: &'static str) -> ClaimInfo {
    ClaimInfo { id, anchor, quote }
}

/// Every claim a task can emit, sorted by id.
pub const CLAIMS: &[ClaimInfo] = &[
    info("appendix-rec-striplet", "Appendix, eq. (zeil-1)", "-(m+1)^2 F(m+1,i)-3(3m+1)(3m+2)F(m,i)=R(m,i+1)-R(m,i)"),
    info("appendix-rec-triplet", "Theorem identity-triplet, Step 5", "f(p)"),
    info("appendix-rec-tsum", "Theorem identity-tstriplet", "TSum(m)=-\\frac{1}{2}Sum(m)"),
    info("appendix-zeil1", "Appendix", "method of creative telescoping"),
    info("appendix-zeil2", "Appendix, eq. (zeil-2)", "3 (3m+1) (3m+2) F(m,2m) = R(m,2m)"),
    info("c0-blocks", "Section W_{2,3}", "\\dim A_{0}( \\WW_{2,3}) =26"),
    info("c0-center", "Corollary, center of A(W_{2,3})", "{\\C}[x] / \\la f_{2,3}(x) \\ra"),
    info("c0-coprime", "Proposition ker-c0", "\\frac{62128128}{14003665} x ^2"),
    info("c0-dim", "Section W_{2,3}", "\\dim A( \\WW_{2,3}) = 38"),
    info("c0-nilpotent-rank", "Remark, W_{2,3}", "U^{(3)} _{0}"),
    info("cor-log-striplet", "Corollary, SW(m)", "1 \\le i \\le m"),
    info("cor-log-triplet", "Theorem dim-zhu-triplet", "(p-1)"),
    info("cor-strict-inequality", "Corollary, introduction", "\\dim A(\\striplet) < \\dim \\mathcal{P}_0(\\striplet)"),
    info("eq-sum-striplet", "eq. (super-rec)", "=\\frac{(-1)^m (3m)!}{m!^3}"),
    info("eq-sum-triplet", "Theorem identity-triplet, Step 5", "f(p) = (-1)^p \\frac{2 (3p-2)!}{(2p-1)(p-1)!^3}"),
    info("eq-tsum", "Theorem identity-tstriplet", "TSum(m)=-\\frac{1}{2}Sum(m)"),
    info("poisson-dim-striplet", "C_2-algebra of SW(m)", "\\dim \\mathcal{P}(\\striplet) \\le 12 m + 8"),
    info("poisson-dim-triplet", "Relations (c2-1)-(c2-2)", "\\overline{H} ^2 = - \\overline{E} \\cdot \\overline{F} = {\\nu}  \\overline{\\omega} ^{ 2p -1}"),
    info("poisson-eq-triplet", "Corollary, triplet", "\\dim A(\\triplet) = \\dim (\\mathcal{P}(\\triplet))=6p-1"),
    info("poisson-even-striplet", "C_2-algebra of SW(m)", "{\\rm dim} \\ \\mathcal{P}_0(\\striplet) =(3m+1)+3(m+1)=6m+4"),
    info("prop-ker-ramond", "Proposition ker-ramond", "\\dim A_{\\sigma} (\\striplet) _0 = 8 m + 4"),
    info("remark-k-identity", "Remark, k-generalized identity", "\\frac{2(-1)^p (3p-1-k)!}{(2p-k)(p-1)!^2 (p-k)!}"),
    info("steps-roots-triplet", "Theorem identity-triplet, Steps 1-4", "G_p(i)=0"),
    info("steps-skew-triplet", "Theorem identity-triplet, Steps 1-4", "G(t)=(-1)^p G(2p-2-t)"),
    info("thm-decomp-striplet", "Theorem, decomposition of A(SW(m))", "\\bigoplus_{i=2m+1}^{3m} \\mathbb{M}_{h^{2i+1,1}} \\oplus \\bigoplus_{i=0}^{m-1} \\mathbb{I}_{h^{2i+1,1}} \\oplus \\mathbb{C}_{h^{2m+1,1}}"),
    info("thm-dim-twisted", "Theorem, twisted Zhu algebra", "\\dim A_{\\sigma}(\\striplet) = 12 m + 8"),
    info("thm-dim-zhu-striplet", "Theorem jezgra-n1", "\\dim A(\\striplet) = 6 m +1"),
    info("thm-dim-zhu-triplet", "Theorem dim-zhu-triplet", "\\dim A(\\triplet) = 6 p -1"),
    info("thm-identity-striplet", "Theorem identity-striplet", "-{2m \\choose m}^2 {t+m \\choose 4m+1}"),
    info("thm-identity-triplet", "Theorem identity-triplet, eq. (more-imp)", "G_p(t)=H_p(t)"),
    info("thm-identity-tstriplet", "Theorem identity-tstriplet", "\\frac{1}{(4m+3)(2m-1)}{2m \\choose m}{2m+1 \\choose m}(t-m){t+\\frac{1}{2}+m \\choose 4m+2}"),
    info("thm-jezgra", "Theorem jezgra", "\\dim A_0 (\\triplet) = 4p-1"),
    info("thm-jezgra-n1", "Theorem jezgra-n1", "\\dim A_0( \\striplet) \\le 4m +1"),
    info("tw-nova-i", "Theorem tw-nova (i)", "(1+z_2)^{t+1/2}(1+z_3)^{t-1/2}=0"),
    info("tw-nova-ii", "Theorem tw-nova (ii)", "- {2m \\choose m} ^2 \\frac{2m +1}{m+1} { t + m + 1/2 \\choose 4 m +2}"),
    info("twisted-center", "Theorem, twisted Zhu algebra", "6m+2"),
    info("zhu-side-triplet", "Theorem dim-zhu-triplet", "\\dim A_{\\pm 1} (\\triplet) = p"),
];

pub fn lookup(id: &str) -> Option<&'static ClaimInfo> {
    CLAIMS.iter().find(|c| c.id == id)
}

/// One line per claim: `id <tab> anchor <tab> quote`.
pub fn render() -> String {
    let mut out = String::new();
    for c in CLAIMS {
        out.push_str(c.id);
        out.push('\t');
        out.push_str(c.anchor);
        out.push('\t');
        out.push_str(c.quote);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_sorted_and_unique() {
        for w in CLAIMS.windows(2) {
            assert!(w[0].id < w[1].id, "{} !< {}", w[0].id, w[1].id);
        }
    }

    #[test]
    fn required_entries_are_present() {
        assert_eq!(lookup("thm-identity-triplet").unwrap().quote, "G_p(t)=H_p(t)");
        assert_eq!(lookup("appendix-zeil1").unwrap().quote, "method of creative telescoping");
    }
}
