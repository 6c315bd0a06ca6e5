//! Abstract simplicial complexes on `E_t`, Alexander duality and complexes
//! fixed by the star operator.

use serde::Serialize;

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::sets::{maximal_masks, star, submasks, Clutter, DenseTable, SetFamily, SubsetMask, MAX_DENSE_T};
use crate::vectors::{f_vector, h_from_f, IdentityMap, LongFVector};

/// A downward-closed family of faces, stored in full.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    faces: SetFamily,
    facets: Clutter,
    vertex_set: SubsetMask,
}

impl Complex {
    /// Validates downward closure.
    pub fn new(faces: SetFamily) -> Result<Self> {
        // Closed iff every face has all of its one-element deletions.
        for &face in faces.masks() {
            let mut rest = face;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if !faces.contains(face ^ bit) {
                    return Err(Error::NotAComplex { missing: face ^ bit });
                }
            }
        }
        Ok(Self::from_closed(faces))
    }

    fn from_closed(faces: SetFamily) -> Self {
        let facets = Clutter::from_antichain_unchecked(
            SetFamily::new(faces.ground(), maximal_masks(faces.masks())).expect("faces in range"),
        );
        let vertex_set = faces.vertex_set();
        Complex {
            faces,
            facets,
            vertex_set,
        }
    }

    #[inline]
    pub fn faces(&self) -> &SetFamily {
        &self.faces
    }

    #[inline]
    pub fn t(&self) -> u32 {
        self.faces.t()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// `V(Δ)`.
    #[inline]
    pub fn vertex_set(&self) -> SubsetMask {
        self.vertex_set
    }

    /// Inclusion-maximal faces.
    #[inline]
    pub fn facets(&self) -> &Clutter {
        &self.facets
    }

    /// Largest face size with a nonzero count; `None` for the empty family.
    pub fn dimension_index(&self) -> Option<usize> {
        self.faces.masks().iter().map(|m| m.count_ones() as usize).max()
    }

    pub fn f_vector(&self) -> LongFVector {
        f_vector(&self.faces)
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces.contains(face)
    }
}

/// Smallest complex containing every given set.
pub fn down_closure(facets: &SetFamily) -> Result<Complex> {
    let table = DenseTable::from_family(facets)?.down_closed();
    Ok(Complex::from_closed(table.to_family()))
}

/// Facets of `c`.
pub fn facets(c: &Complex) -> &Clutter {
    c.facets()
}

/// `Δ^∨` computed relative to `V(Δ)`, with a flag telling whether
/// `V(Δ^∨) = V(Δ)` (the only case in which the dual is meaningful).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderDual {
    pub complex: Complex,
    pub vertex_sets_match: bool,
}

/// `Δ^∨ = {V(Δ) - F : F ∈ 2^V(Δ) - Δ}`.
pub fn alexander_dual(c: &Complex) -> Result<AlexanderDual> {
    let v = c.vertex_set();
    if v.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if v.len() > MAX_DENSE_T {
        return Err(Error::GroundSetTooLarge {
            t: v.len(),
            limit: MAX_DENSE_T,
        });
    }
    let vbits = v.bits();
    let dual: Vec<u64> = submasks(vbits).filter(|&f| !c.contains(f)).map(|f| vbits ^ f).collect();
    let complex = Complex::from_closed(SetFamily::new(c.faces.ground(), dual)?);
    let vertex_sets_match = complex.vertex_set() == v;
    Ok(AlexanderDual {
        complex,
        vertex_sets_match,
    })
}

/// Both sides of the Alexander self-duality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlexanderSelfDuality {
    /// `Δ^∨ = Δ`.
    pub structural: bool,
    /// `#Δ = 2^(|V(Δ)| - 1)`.
    pub cardinality: bool,
}

pub fn alexander_self_duality(c: &Complex) -> Result<AlexanderSelfDuality> {
    let dual = alexander_dual(c)?;
    let structural = dual.vertex_sets_match && dual.complex == *c;
    let cardinality = c.len() as u64 == 1u64 << (c.vertex_set().len() - 1);
    Ok(AlexanderSelfDuality {
        structural,
        cardinality,
    })
}

/// `Δ = Δ^∨`, cross-checked against the cardinality test.
///
/// Returns [`Error::CriterionDisagreement`] when the two disagree, which
/// happens for complexes holding a complementary pair of faces, e.g.
/// `{0̂,{1},{2},{3},{4},{1,2},{1,3},{3,4}}`.
pub fn is_alexander_self_dual(c: &Complex) -> Result<bool> {
    let both = alexander_self_duality(c)?;
    if both.structural != both.cardinality {
        return Err(Error::CriterionDisagreement {
            structural: both.structural,
            cardinality: both.cardinality,
        });
    }
    Ok(both.structural)
}

/// `Δ* = Δ` relative to `E_t`.
pub fn is_star_self_dual(c: &Complex) -> Result<bool> {
    Ok(star(&c.faces)? == c.faces)
}

/// Enumerative facts of a complex with `Δ* = Δ`:
///
/// * `size`: `#Δ = Σ f_k = Σ 2^(t-k) h_k = 2^(t-1)`;
/// * `eq17`: `f_l + f_(t-l) = C(t, l)` for all `l`;
/// * `middle`: `f_(t/2) = C(t, t/2) / 2` (even `t` only).
pub fn check_star_selfdual_facts(c: &Complex) -> Result<IdentityMap> {
    if !is_star_self_dual(c)? {
        return Err(Error::NotStarSelfDual);
    }
    let t = c.t() as usize;
    let fv = c.f_vector();
    let hv = h_from_f(&fv)?;
    let half = 1i128 << (t - 1);
    let weighted: i128 = (0..=t).map(|k| (1i128 << (t - k)) * hv.get(k) as i128).sum();

    let mut out = IdentityMap::new();
    out.insert(
        "size",
        c.len() as i128 == half && fv.total() as i128 == half && weighted == half,
    );
    out.insert(
        "eq17",
        (0..=t).all(|l| fv.get(l) as i64 + fv.get(t - l) as i64 == binom(t, l)),
    );
    if t.is_multiple_of(2) {
        out.insert("middle", 2 * fv.get(t / 2) as i64 == binom(t, t / 2));
    }
    Ok(out)
}

/// Checks that `c` is `2^[t] - A^▽` for the clutter `a`, and that both sides
/// are fixed by the star operator.
pub fn verify_complex_bijection(c: &Complex, a: &Clutter) -> Result<bool> {
    let up = c.faces.power_set_complement()?;
    let generators = crate::sets::min_elements(&up);
    Ok(is_star_self_dual(c)? && star(&up)? == up && generators == *a)
}
