//! Shared back half of every subcommand: semicubical set in, report out.

use trace_homology::{chain_complex, Int, IntChainComplex, SemicubicalSet, TraceMonoid};

use crate::report::{AnalysisReport, HomologyEntry, MatrixDump};
use crate::Failure;

pub struct Analysis {
    pub report: AnalysisReport,
    pub complex: SemicubicalSet,
    pub chain: IntChainComplex,
}

/// Builds the chain complex, checks its integrity, computes homology in
/// every degree, and assembles the report.
///
/// `identities_must_hold` distinguishes pipeline invariants (derived
/// complexes must be well formed; a failure is an internal error) from
/// deliberately unvalidated input, where violations are reported and the
/// homology section is omitted as undefined.
pub fn analyze(
    kind: &str,
    monoid: &TraceMonoid,
    complex: SemicubicalSet,
    mut diagnostics: Vec<String>,
    dump_matrices: bool,
    identities_must_hold: bool,
) -> Result<Analysis, Failure> {
    let identity_report = complex.validate();
    let chain: IntChainComplex = chain_complex::<Int>(&complex);
    let squares = chain.boundary_squares_to_zero();
    let sound = identity_report.is_valid() && squares;
    if !sound && identities_must_hold {
        return Err(Failure::Internal(format!(
            "derived complex is not semicubical: {} identity violation(s), boundary squared {}",
            identity_report.violations.len(),
            if squares { "vanishes" } else { "nonzero" },
        )));
    }
    if sound {
        diagnostics.push("semicubical identities: OK; boundary squares to zero".to_string());
    } else {
        diagnostics.push(format!(
            "semicubical identities violated at {} position(s); homology is undefined for this \
             input and omitted",
            identity_report.violations.len()
        ));
    }

    let homology = if sound {
        chain
            .homology_all()
            .iter()
            .map(|h| HomologyEntry {
                betti: h.betti,
                torsion: h.torsion.iter().map(|t| t.to_string()).collect(),
            })
            .collect()
    } else {
        Vec::new()
    };

    let matrices = dump_matrices.then(|| {
        (1..complex.degree_count())
            .map(|n| {
                let d = chain.differential(n).expect("differential within range");
                MatrixDump {
                    degree: n,
                    rows: d.rows(),
                    cols: d.cols(),
                    row_basis: complex.labels(n - 1).to_vec(),
                    col_basis: complex.labels(n).to_vec(),
                    entries: d
                        .entries()
                        .iter()
                        .map(|(r, c, v)| (*r, *c, v.to_string()))
                        .collect(),
                }
            })
            .collect::<Vec<_>>()
    });

    let report = AnalysisReport {
        kind: kind.to_string(),
        p: monoid.cliques().counts(),
        cells: complex.cell_counts(),
        homology,
        diagnostics,
        matrices,
    };
    Ok(Analysis {
        report,
        complex,
        chain,
    })
}

/// Renders an independence relation as `{a,b} {c,d}`.
pub fn independence_summary(monoid: &TraceMonoid) -> String {
    let pairs: Vec<String> = monoid
        .independence()
        .pairs()
        .map(|(a, b)| {
            format!(
                "{{{},{}}}",
                monoid.alphabet().name(a),
                monoid.alphabet().name(b)
            )
        })
        .collect();
    if pairs.is_empty() {
        "(none)".to_string()
    } else {
        pairs.join(" ")
    }
}
