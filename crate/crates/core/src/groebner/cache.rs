use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{is_zero_dimensional, quotient_dimension, GroebnerBasis, QuotientDimension, Stats};
use crate::exact::{Field, FieldDesc};
use crate::polyring::{MonomialOrder, Poly, PolyError, Ring, TermJson};

/// Hex SHA-256 of `bytes`.
pub fn content_hash(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisFlags {
    pub reduced: bool,
    pub zero_dimensional: bool,
}

/// On-disk form of a basis together with the generators it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisFile {
    /// Hash of the upstream system file.
    pub input_hash: String,
    pub vars: Vec<String>,
    pub field: FieldDesc,
    pub order: MonomialOrder,
    pub pipeline: String,
    pub generators: Vec<Vec<TermJson>>,
    pub basis: Vec<Vec<TermJson>>,
    pub flags: BasisFlags,
    pub quotient_dimension: QuotientDimension,
    pub stats: Stats,
}

impl BasisFile {
    pub fn new<K: Field>(gb: &GroebnerBasis<K>, generators: &[Poly<K>], input_hash: &str, pipeline: &str) -> Self {
        BasisFile {
            input_hash: input_hash.to_string(),
            vars: gb.ring().vars().to_vec(),
            field: gb.ring().field_desc(),
            order: gb.order(),
            pipeline: pipeline.to_string(),
            generators: generators.iter().map(TermJson::list).collect(),
            basis: gb.basis().iter().map(TermJson::list).collect(),
            flags: BasisFlags { reduced: gb.is_reduced(), zero_dimensional: is_zero_dimensional(gb) },
            quotient_dimension: quotient_dimension(gb),
            stats: gb.stats().clone(),
        }
    }

    /// Generators and basis over `K`.
    pub fn load<K: Field>(&self) -> Result<(Vec<Poly<K>>, GroebnerBasis<K>), PolyError> {
        let tag = K::tag_from_desc(&self.field)?;
        let ring = Ring::<K>::new(self.vars.clone(), tag, self.order);
        let gens = self.generators.iter().map(|t| TermJson::to_poly(&ring, t)).collect::<Result<Vec<_>, _>>()?;
        let basis = self.basis.iter().map(|t| TermJson::to_poly(&ring, t)).collect::<Result<Vec<_>, _>>()?;
        let mut gb = GroebnerBasis::from_basis(&ring, basis, self.flags.reduced);
        gb.stats = self.stats.clone();
        Ok((gens, gb))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::groebner::grevlex_then_lex;
    use crate::polyring::parse_poly;

    #[test]
    fn hash_is_sha256() {
        assert_eq!(content_hash(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn basis_file_round_trip() {
        let r = Ring::rational(&["x", "y"], MonomialOrder::Lex);
        let gens = vec![parse_poly(&r, "x^2 + y").unwrap(), parse_poly(&r, "y^2 - 1/3").unwrap()];
        let gb = grevlex_then_lex(&gens, &Default::default()).unwrap();
        let file = BasisFile::new(&gb, &gens, "00", "grevlex_then_lex");
        assert_eq!(file.quotient_dimension, QuotientDimension::Finite(4));
        let text = serde_json::to_string_pretty(&file).unwrap();
        let back: BasisFile = serde_json::from_str(&text).unwrap();
        let (g2, gb2) = back.load::<Rational>().unwrap();
        assert_eq!(g2, gens);
        assert_eq!(gb2.basis(), gb.basis());
    }
}
