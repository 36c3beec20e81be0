use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

use super::ambient::Ambient;
use super::certificate::{is_n_cluster_tilting, CTCertificate};
use super::rigidity::{ext_row, resolutions};

/// Subsets of this many optional modules or more are not searched.
pub const MAX_OPTIONAL: usize = 24;

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub n: usize,
    pub ambient: Vec<String>,
    pub mandatory: Vec<String>,
    pub rigid_subsets: usize,
    pub certificates: Vec<CTCertificate>,
}

/// Every subset of the ambient indecomposables containing all projectives
/// and injectives that is n-cluster tilting, by size and then by index.
pub fn search_cluster_tilting(ambient: &Ambient, n: usize, seed: u64) -> Result<SearchOutcome> {
    assert!(n >= 1, "n must be positive");
    if !ambient.complete {
        return Err(Error::IncompleteEnumeration(format!(
            "cluster tilting search needs a complete list of indecomposables: {}",
            ambient.note
        )));
    }
    let alg = &ambient.algebra;
    let max_k = n - 1;
    let len = ambient.len();
    let res = resolutions(alg, &ambient.modules, max_k);
    let zero: Vec<Vec<bool>> = (0..len)
        .into_par_iter()
        .map(|a| (0..len).map(|b| ext_row(alg, &res[a], &ambient.modules[b], max_k).iter().all(|&d| d == 0)).collect())
        .collect();
    let mandatory = ambient.mandatory();
    let optional: Vec<usize> = (0..len).filter(|i| !mandatory.contains(i)).collect();
    if optional.len() >= MAX_OPTIONAL {
        return Err(Error::Undecided(format!("{} optional indecomposables exceed the search limit", optional.len())));
    }
    let rigid_with = |set: &[usize], x: usize| zero[x][x] && set.iter().all(|&s| zero[s][x] && zero[x][s]);
    let mut base: Vec<usize> = Vec::new();
    for &m in &mandatory {
        if !rigid_with(&base, m) {
            return Ok(SearchOutcome {
                n,
                ambient: ambient.labels.clone(),
                mandatory: mandatory.iter().map(|&i| ambient.labels[i].clone()).collect(),
                rigid_subsets: 0,
                certificates: Vec::new(),
            });
        }
        base.push(m);
    }
    let mut rigid = Vec::new();
    let mut stack = vec![(base.clone(), 0usize)];
    while let Some((set, from)) = stack.pop() {
        rigid.push(set.clone());
        for (pos, &x) in optional.iter().enumerate().skip(from) {
            if rigid_with(&set, x) {
                let mut next = set.clone();
                next.push(x);
                stack.push((next, pos + 1));
            }
        }
    }
    let maximal = |set: &Vec<usize>| {
        (0..len).all(|x| {
            let member = set.contains(&x);
            let left = set.iter().all(|&s| zero[x][s]);
            let right = set.iter().all(|&s| zero[s][x]);
            left == member && right == member
        })
    };
    let mut hits: Vec<Vec<usize>> = rigid.iter().filter(|s| maximal(s)).cloned().collect();
    for h in &mut hits {
        h.sort_unstable();
    }
    hits.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut certificates = Vec::new();
    for (i, h) in hits.iter().enumerate() {
        let spec = ambient.subcategory(format!("ct{}", i + 1), h, seed)?;
        let cert = is_n_cluster_tilting(&spec, n, ambient)?;
        if !cert.cluster_tilting {
            return Err(Error::InvariantViolation(format!(
                "search table and certificate disagree on {:?}: {}",
                spec.labels(),
                cert.failures.join("; ")
            )));
        }
        certificates.push(cert);
    }
    Ok(SearchOutcome {
        n,
        ambient: ambient.labels.clone(),
        mandatory: mandatory.iter().map(|&i| ambient.labels[i].clone()).collect(),
        rigid_subsets: rigid.len(),
        certificates,
    })
}
