use crate::error::{Error, Result};
use crate::group::{Family, Subgroup};

/// Which rule a prediction comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictionSource {
    /// Every subgroup of an abelian group is a strong Gelfand subgroup.
    Abelian,
    DihedralClassification,
    DicyclicClassification,
}

/// The closed-form classification of strong Gelfand subgroups for one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremPrediction {
    pub family: Family,
    pub source: PredictionSource,
}

pub fn predict(family: &Family) -> Result<TheoremPrediction> {
    let source = match *family {
        Family::Cyclic(_) | Family::Dihedral(1 | 2) | Family::Dicyclic(1) => PredictionSource::Abelian,
        Family::Dihedral(_) => PredictionSource::DihedralClassification,
        Family::Dicyclic(_) => PredictionSource::DicyclicClassification,
        Family::Product(..) => return Err(Error::Unsupported(format!("no classification for {}", family.name()))),
    };
    Ok(TheoremPrediction { family: family.clone(), source })
}

impl TheoremPrediction {
    /// Predicted verdict for `h`, which must be a subgroup of the group this
    /// prediction was made for.
    ///
    /// Dihedral `D_2n` (`n ≥ 3`): `H` is strong Gelfand iff it leaves `⟨a⟩`,
    /// or `|H| = n`, or `n` is even and `H = ⟨a²⟩`.
    /// Dicyclic `Dic_4n` (`n ≥ 2`): iff `H` leaves `⟨a⟩` or `|H| ∈ {n, 2n}`.
    pub fn predicts_strong_gelfand(&self, h: &Subgroup) -> Result<bool> {
        if *h.parent().family() != self.family {
            return Err(Error::Domain(format!(
                "subgroup of {} checked against a prediction for {}",
                h.parent().name(),
                self.family.name()
            )));
        }
        let g = h.parent();
        let in_rotations = || h.members().iter().all(|&x| g.is_rotation(x));
        Ok(match (self.source, &self.family) {
            (PredictionSource::Abelian, _) => true,
            (PredictionSource::DihedralClassification, &Family::Dihedral(n)) => {
                !in_rotations() || h.order() == n || (n % 2 == 0 && h.order() == n / 2)
            }
            (PredictionSource::DicyclicClassification, &Family::Dicyclic(n)) => {
                !in_rotations() || h.order() == n || h.order() == 2 * n
            }
            _ => unreachable!("source is derived from the family"),
        })
    }
}
