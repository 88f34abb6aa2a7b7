//! Symmetric group characters by the Murnaghan-Nakayama rule, cached per degree.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::{Arc, LazyLock, RwLock};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::partition::{partitions, Partition};

/// The character table of `S_n`, rows and columns in decreasing lex order.
#[derive(Debug)]
pub struct CharacterTable {
    pub n: u32,
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `chi[λ][ρ]`.
    chi: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        self.chi[self.index[lambda]][self.index[rho]]
    }

    pub fn row(&self, lambda_index: usize) -> &[i64] {
        &self.chi[lambda_index]
    }

    fn from_values(n: u32, chi: Vec<Vec<i64>>) -> Self {
        let partitions = partitions(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self {
            n,
            partitions,
            index,
            chi,
        }
    }
}

static TABLES: LazyLock<RwLock<BTreeMap<u32, Arc<CharacterTable>>>> =
    LazyLock::new(|| RwLock::new(BTreeMap::new()));

/// Beta-set of `λ` with `len` beads.
fn beta_set(lambda: &Partition, len: usize) -> Vec<i64> {
    (0..len)
        .map(|i| lambda.part(i) as i64 + (len - 1 - i) as i64)
        .collect()
}

fn from_beta(beta: &[i64]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    Partition::new(
        b.iter()
            .enumerate()
            .map(|(i, &x)| (x - (len - 1 - i) as i64) as u32)
            .collect(),
    )
}

/// All ways to remove a border strip of size `r` from `λ`: `(sign, λ - strip)`.
pub fn remove_border_strips(lambda: &Partition, r: u32) -> Vec<(i64, Partition)> {
    let len = lambda.len();
    let beta = beta_set(lambda, len);
    let r = r as i64;
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - r;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[i] = nb;
        out.push((sign, from_beta(&next)));
    }
    out
}

fn compute_table(n: u32) -> CharacterTable {
    let parts = partitions(n);
    let mut chi = vec![vec![0i64; parts.len()]; parts.len()];
    for (j, rho) in parts.iter().enumerate() {
        if n == 0 {
            chi[0][0] = 1;
            continue;
        }
        let r = rho.part(0);
        let rest = rho.remove_part(r).unwrap();
        let sub = table(n - r);
        for (i, lambda) in parts.iter().enumerate() {
            chi[i][j] = remove_border_strips(lambda, r)
                .into_iter()
                .map(|(s, mu)| s * sub.value(&mu, &rest))
                .sum();
        }
    }
    CharacterTable::from_values(n, chi)
}

/// The (cached) character table of `S_n`.
pub fn table(n: u32) -> Arc<CharacterTable> {
    if let Some(t) = TABLES.read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(compute_table(n));
    TABLES.write().unwrap().entry(n).or_insert(t).clone()
}

/// Degrees whose tables are currently in memory.
pub fn cached_degrees() -> Vec<u32> {
    TABLES.read().unwrap().keys().copied().collect()
}

/// `χ^λ(ρ)`.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "character of mismatched sizes");
    table(lambda.size()).value(lambda, rho)
}

const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    checksum: String,
    tables: BTreeMap<u32, Vec<Vec<i64>>>,
}

fn checksum(tables: &BTreeMap<u32, Vec<Vec<i64>>>) -> String {
    let bytes = serde_json::to_vec(tables).expect("serializable");
    let digest = Sha256::digest(&bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Write every table up to degree `max` to `path`.
pub fn save_cache(path: &Path, max: u32) -> std::io::Result<()> {
    let tables: BTreeMap<u32, Vec<Vec<i64>>> = (0..=max).map(|n| (n, table(n).chi.clone())).collect();
    let file = CacheFile {
        version: CACHE_VERSION,
        checksum: checksum(&tables),
        tables,
    };
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, serde_json::to_vec(&file)?)?;
    std::fs::rename(tmp, path)
}

/// Load tables from `path`. Returns false (and loads nothing) when the file
/// is missing, from another version, or fails its checksum.
pub fn load_cache(path: &Path) -> bool {
    let Ok(bytes) = std::fs::read(path) else {
        return false;
    };
    let Ok(file) = serde_json::from_slice::<CacheFile>(&bytes) else {
        return false;
    };
    if file.version != CACHE_VERSION || checksum(&file.tables) != file.checksum {
        return false;
    }
    let mut parsed = Vec::new();
    for (n, chi) in file.tables {
        let len = partitions(n).len();
        if chi.len() != len || chi.iter().any(|r| r.len() != len) {
            return false;
        }
        parsed.push((n, CharacterTable::from_values(n, chi)));
    }
    let mut tables = TABLES.write().unwrap();
    for (n, t) in parsed {
        tables.entry(n).or_insert_with(|| Arc::new(t));
    }
    true
}

/// Load the cache if valid, otherwise rebuild it up to degree `max` and save.
pub fn load_or_rebuild_cache(path: &Path, max: u32) -> std::io::Result<bool> {
    if load_cache(path) && TABLES.read().unwrap().contains_key(&max) {
        return Ok(true);
    }
    save_cache(path, max)?;
    Ok(false)
}
