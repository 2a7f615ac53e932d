//! Closed-form character tables of the dihedral groups I2(m), including G2
//! as I2(6). Two-dimensional character values are `2cos(2*pi*i*j/m)`,
//! exact in the group's real cyclotomic field.

use std::sync::Arc;

use crate::coxeter::CoxeterGroup;
use crate::error::{Error, Result};
use crate::field::AlgNum;

use super::{CharacterTable, IrrLabel, Irreducible};

pub fn char_table_dihedral(group: &Arc<CoxeterGroup>, m: u32) -> Result<CharacterTable> {
    if m < 3 {
        return Err(Error::Domain(
            "dihedral order parameter m must be >= 3".into(),
        ));
    }
    if group.rank() != 2 || group.order() != 2 * m as u64 {
        return Err(Error::Domain(
            "group is not a rank-2 dihedral realization".into(),
        ));
    }
    let field = &group.datum.field;
    let k = group.num_classes();
    // Rotation index of each class: class_of[(st)^i] for i = 0..=m/2; the
    // reflection classes are whatever remains.
    let s = group.generator_index(0);
    let t = group.generator_index(1);
    let r = group.compose_idx(s, t);
    let mut rotation_index: Vec<Option<u32>> = vec![None; k];
    let mut cur = 0u32; // identity
    for i in 0..=m / 2 {
        rotation_index[group.class_of[cur as usize] as usize].get_or_insert(i);
        cur = group.compose_idx(cur, r);
    }
    // Generator-count parities per class, for the linear characters.
    let parities: Vec<(bool, bool)> = group
        .classes
        .iter()
        .map(|c| {
            let word = group.reduced_word(c.rep);
            let s_count = word.iter().filter(|&&g| g == 0).count();
            let t_count = word.len() - s_count;
            (s_count % 2 == 1, t_count % 2 == 1)
        })
        .collect();

    let mut irreducibles = Vec::new();
    // Linear characters: (eps_s, eps_t) with eps in {+1, -1}; for odd m only
    // the two with eps_s = eps_t are well-defined.
    let linear_choices: &[(bool, bool)] = if m % 2 == 0 {
        &[(false, false), (true, true), (true, false), (false, true)]
    } else {
        &[(false, false), (true, true)]
    };
    for &(neg_s, neg_t) in linear_choices {
        let values: Vec<AlgNum> = parities
            .iter()
            .map(|&(s_odd, t_odd)| {
                let mut v = 1i64;
                if neg_s && s_odd {
                    v = -v;
                }
                if neg_t && t_odd {
                    v = -v;
                }
                AlgNum::from_int(field, v)
            })
            .collect();
        irreducibles.push(Irreducible {
            label: IrrLabel::DihedralLinear(!neg_s, !neg_t),
            phi: None,
            values,
        });
    }
    // Two-dimensional characters chi_j, 1 <= j <= m/2 - 1 when m even,
    // (m-1)/2 when m odd: value 2cos(2 pi i j / m) on the rotation class of
    // r^i, zero on reflections. Values are computed in the conductor-2m
    // field and re-expressed in the group's field (they are rational for the
    // crystallographic realizations of I2(3), I2(4), G2).
    let big_field = crate::field::RealCycField::new(2 * m);
    let two_dim_count = if m % 2 == 0 { m / 2 - 1 } else { (m - 1) / 2 };
    for j in 1..=two_dim_count {
        let values: Vec<AlgNum> = (0..k)
            .map(|c| match rotation_index[c] {
                Some(i) => {
                    let v = big_field.two_cos_multiple(2 * (i as i64) * (j as i64));
                    super::reexpress(&v, field)
                }
                None => field.zero(),
            })
            .collect();
        irreducibles.push(Irreducible {
            label: IrrLabel::DihedralTwoDim(j),
            phi: None,
            values,
        });
    }
    let table = CharacterTable {
        group: Arc::clone(group),
        irreducibles,
    };
    table.verify()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::{char_table, tables_abstractly_equal};

    fn group(s: &str) -> Arc<CoxeterGroup> {
        CoxeterGroup::build_default(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn g2_table_shape() {
        let t = char_table(&group("G2")).unwrap();
        let mut d: Vec<u64> = t
            .irreducibles
            .iter()
            .map(|i| i.degree().try_into().unwrap())
            .collect();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 1, 1, 2, 2]);
    }

    #[test]
    fn i2_3_matches_a2() {
        let ti = char_table(&group("I2(3)")).unwrap();
        let ta = char_table(&group("A2")).unwrap();
        assert!(tables_abstractly_equal(&ti, &ta));
    }

    #[test]
    fn i2_4_matches_b2() {
        let ti = char_table(&group("I2(4)")).unwrap();
        let tb = char_table(&group("B2")).unwrap();
        assert!(tables_abstractly_equal(&ti, &tb));
    }

    #[test]
    fn odd_and_even_dihedral_verify() {
        for m in 3..=12 {
            let t = char_table(&group(&format!("I2({m})"))).unwrap();
            let expected = if m % 2 == 0 {
                m / 2 + 3
            } else {
                (m - 1) / 2 + 2
            };
            assert_eq!(t.irreducibles.len() as u32, expected, "m={m}");
        }
    }

    #[test]
    fn i2_5_two_dimensionals_are_galois_conjugate() {
        let t = char_table(&group("I2(5)")).unwrap();
        let twos: Vec<&Irreducible> = t
            .irreducibles
            .iter()
            .filter(|i| i.degree() == 2u32.into())
            .collect();
        assert_eq!(twos.len(), 2);
        assert_ne!(twos[0].values, twos[1].values);
    }
}
