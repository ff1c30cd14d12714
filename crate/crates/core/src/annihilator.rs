//! The annihilator of E_n^alpha(q) acting on 𝔼_alpha V^⊗n, computed from
//! the cellular basis (n_st with some component of blam wider than N) and
//! by brute force, and the quotient dimensions dim ETL_{n,N}, dim PTL_n.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bt_algebra::{BtAlgebra, Element};
use crate::cellular::{ptl_generator, Cellular, Flavor};
use crate::coeff::{EvalPoint, Field, FieldTask, Ring};
use crate::error::{BtError, Result};
use crate::linalg::{Echelon, Insert, SparseRow};
use crate::set_partitions::{enumerate as enumerate_partitions, SetPartition};
use crate::symmetric_group::Permutation;
use crate::tableaux::{enumerate_l, filter_columns, types, LambdaPair, LambdaTableau};
use crate::tensor::{Letter, TensorSpace};

/// All (Λ, s, t) whose n_st lie in the annihilator.
pub fn predicted_annihilator(n: usize, big_n: usize, alpha: &[usize]) -> Vec<(LambdaPair, LambdaTableau, LambdaTableau)> {
    debug_assert_eq!(alpha.iter().sum::<usize>(), n);
    let (_, wide) = filter_columns(&enumerate_l(alpha), big_n);
    let mut out = Vec::new();
    for lam in wide {
        let std = lam.std();
        for s in &std {
            for t in &std {
                out.push((lam.clone(), s.clone(), t.clone()));
            }
        }
    }
    out
}

fn count_std_sq(ls: &[LambdaPair]) -> usize {
    ls.iter().map(|l| l.std().len().pow(2)).sum()
}

pub fn predicted_dim(n: usize, big_n: usize, alpha: &[usize]) -> usize {
    debug_assert_eq!(alpha.iter().sum::<usize>(), n);
    count_std_sq(&filter_columns(&enumerate_l(alpha), big_n).1)
}

/// Σ_alpha Σ_{Λ ∈ L_{n,≤N}(alpha)} |Std(Λ)|²
pub fn etl_dim(n: usize, big_n: usize) -> usize {
    types(n).iter().map(|alpha| count_std_sq(&filter_columns(&enumerate_l(alpha), big_n).0)).sum()
}

pub fn etl_dim_alpha(big_n: usize, alpha: &[usize]) -> usize {
    count_std_sq(&filter_columns(&enumerate_l(alpha), big_n).0)
}

pub fn ptl_dim(n: usize) -> usize {
    etl_dim(n, 2)
}

/// Kernel dimension of the action of Σ_{B ∈ blocks} 𝔼_B E_n on V^⊗n with r
/// colors. 𝔼_B acts as the projector onto {v_i^s : A_s = B}, so the kernel
/// splits over B into the relations among w -> (v g_w)_{A_v = B}.
pub fn kernel_dim<F: Field>(field: &F, n: usize, big_n: usize, r: usize, blocks: &[SetPartition]) -> Result<usize> {
    let space = TensorSpace::new(n, big_n, r, field.clone())?;
    let perms = Permutation::all(n);
    let words: Vec<Vec<Letter>> = perms.iter().map(|w| w.reduced_word().into_iter().map(Letter::G).collect()).collect();
    let mut by_block: std::collections::HashMap<SetPartition, Vec<u64>> = std::collections::HashMap::new();
    for k in space.basis() {
        by_block.entry(space.partition_of(k)).or_default().push(k);
    }
    let dim = space.dim();
    let mut total = 0;
    for b in blocks {
        let inputs = by_block.get(b).map(Vec::as_slice).unwrap_or(&[]);
        let mut ech = Echelon::new(field.clone());
        for word in &words {
            let mut row: SparseRow<F::Elem> = SparseRow::new();
            for (slot, &k) in inputs.iter().enumerate() {
                for (out, c) in space.act_word(&space.basis_vector(k), word)? {
                    row.insert(slot as u64 * dim + out, c);
                }
            }
            ech.insert(row);
            if ech.rank() == perms.len() {
                break;
            }
        }
        total += perms.len() - ech.rank();
    }
    Ok(total)
}

/// Brute-force annihilator dimension inside E_n^alpha with r = len(alpha).
pub fn bruteforce_annihilator_dim<F: Field>(field: &F, n: usize, big_n: usize, alpha: &[usize]) -> Result<usize> {
    let blocks: Vec<SetPartition> = enumerate_partitions(n).into_iter().filter(|p| p.type_of() == alpha).collect();
    kernel_dim(field, n, big_n, alpha.len(), &blocks)
}

/// Kernel of the whole of E_n on V^⊗n with r colors.
pub fn faithfulness_kernel<F: Field>(field: &F, n: usize, big_n: usize, r: usize) -> Result<usize> {
    kernel_dim(field, n, big_n, r, &enumerate_partitions(n))
}

#[derive(Clone)]
struct BruteTask<'a> {
    n: usize,
    big_n: usize,
    alpha: &'a [usize],
}

impl FieldTask for BruteTask<'_> {
    type Output = Result<usize>;
    fn run<F: Field>(self, field: F) -> Result<usize> {
        bruteforce_annihilator_dim(&field, self.n, self.big_n, self.alpha)
    }
}

/// Brute-force dimension at every point, in parallel.
pub fn bruteforce_at_points(n: usize, big_n: usize, alpha: &[usize], points: &[EvalPoint]) -> Result<Vec<usize>> {
    points.par_iter().map(|p| p.run(BruteTask { n, big_n, alpha })?).collect()
}

/// The predicted basis elements as algebra elements.
pub fn predicted_elements<R: Ring>(cell: &Cellular<R>, big_n: usize, alpha: &[usize]) -> Result<Vec<Element<R::Elem>>> {
    let n = cell.algebra().n();
    predicted_annihilator(n, big_n, alpha).iter().map(|(lam, s, t)| cell.cell_element(lam, s, t, Flavor::N)).collect()
}

/// Whether every element kills every basis vector of V^⊗n (r = len(alpha)).
pub fn kills_tensor_space<R: Ring>(alg: &BtAlgebra<R>, big_n: usize, r: usize, elems: &[Element<R::Elem>]) -> Result<bool> {
    let space = TensorSpace::new(alg.n(), big_n, r, alg.ring().clone())?;
    for x in elems {
        for k in space.basis() {
            if !space.act_element(&space.basis_vector(k), alg, x)?.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn rank_of<R: Ring>(ring: &R, elems: &[Element<R::Elem>]) -> usize {
    crate::linalg::rank(ring, elems.iter().map(|x| x.terms().map(|(k, c)| (k as u64, c.clone())).collect()))
}

#[derive(Clone)]
struct PredictedTask<'a> {
    n: usize,
    big_n: usize,
    alpha: &'a [usize],
}

/// (kills, rank)
impl FieldTask for PredictedTask<'_> {
    type Output = Result<(bool, usize)>;
    fn run<F: Field>(self, field: F) -> Result<(bool, usize)> {
        let cell = Cellular::new(BtAlgebra::new(self.n, field.clone()));
        let elems = predicted_elements(&cell, self.big_n, self.alpha)?;
        let kills = kills_tensor_space(cell.algebra(), self.big_n, self.alpha.len(), &elems)?;
        Ok((kills, rank_of(&field, &elems)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointResult {
    pub point: EvalPoint,
    pub bruteforce: usize,
    pub predicted_rank: usize,
    pub kills: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorReport {
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub alpha: Vec<usize>,
    pub predicted: usize,
    pub bruteforce: usize,
    pub points: Vec<EvalPoint>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub per_point: Vec<PointResult>,
}

/// Full check: predicted n_st kill V^⊗n, are independent, and their number
/// equals the brute-force kernel at every point.
pub fn verify_predicted_basis(n: usize, big_n: usize, alpha: &[usize], points: &[EvalPoint]) -> Result<AnnihilatorReport> {
    if points.is_empty() {
        return Err(BtError::InvalidShape("no evaluation points".into()));
    }
    let predicted = predicted_dim(n, big_n, alpha);
    let per_point: Vec<PointResult> = points
        .par_iter()
        .map(|p| {
            let bruteforce = p.run(BruteTask { n, big_n, alpha })??;
            let (kills, predicted_rank) = p.run(PredictedTask { n, big_n, alpha })??;
            Ok(PointResult { point: p.clone(), bruteforce, predicted_rank, kills })
        })
        .collect::<Result<_>>()?;
    let bruteforce = per_point.iter().map(|p| p.bruteforce).min().unwrap_or(0);
    let matched = per_point.iter().all(|p| p.kills && p.predicted_rank == predicted && p.bruteforce == predicted);
    Ok(AnnihilatorReport { n, big_n, alpha: alpha.to_vec(), predicted, bruteforce, points: points.to_vec(), matched, per_point })
}

/// dim of the two-sided ideal of E_n^alpha generated by 𝔼_alpha e_i e_{i+1} St_i.
pub fn steinberg_ideal_dim<F: Field>(field: &F, n: usize, alpha: &[usize], i: usize) -> Result<usize> {
    let alg = BtAlgebra::new(n, field.clone());
    let seed = alg.project_alpha(&ptl_generator(&alg, i)?, alpha);
    let mut gens = Vec::new();
    for j in 1..n {
        gens.push(alg.gen_g(j)?);
        gens.push(alg.gen_e(j)?);
    }
    let row = |x: &Element<F::Elem>| -> SparseRow<F::Elem> { x.terms().map(|(k, c)| (k as u64, c.clone())).collect() };
    let mut ech = Echelon::new(field.clone());
    let mut queue = VecDeque::new();
    if ech.insert(row(&seed)) == Insert::Independent {
        queue.push_back(seed);
    }
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            for y in [alg.mul(&x, g), alg.mul(g, &x)] {
                if ech.insert(row(&y)) == Insert::Independent {
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(ech.rank())
}
