//! Regenerates the computed part of the table corpus and normalizes the
//! hand-entered part.
//!
//! ```text
//! cargo run --release -p blockgraph-core --example ingest_tables [-- <corpus dir> [names...]]
//! ```
//!
//! Permutation groups are given by generators; J1, Sz(8) and L5(2) are built
//! as matrix groups over small finite fields, enumerated in full, and passed
//! through the same Dixon–Schneider code. Each written table is checked for
//! its group order and class count before it is saved.

use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::path::{Path, PathBuf};
use std::time::Instant;

use blockgraph::chartab::{parse_document, print_table, CharacterTable};
use blockgraph::tablegen::{
    dixon_table, enumerate, ElementIndex, GroupElement, HashIndex, Perm, DEFAULT_BOUND,
};

trait SmallField: Send + Sync + 'static {
    fn add(a: u8, b: u8) -> u8;
    fn mul(a: u8, b: u8) -> u8;
    fn neg(a: u8) -> u8;
    fn inv(a: u8) -> u8;
}

struct F11;

impl SmallField for F11 {
    fn add(a: u8, b: u8) -> u8 {
        (a + b) % 11
    }
    fn mul(a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % 11) as u8
    }
    fn neg(a: u8) -> u8 {
        (11 - a) % 11
    }
    fn inv(a: u8) -> u8 {
        (1..11).find(|&b| Self::mul(a, b) == 1).expect("nonzero")
    }
}

/// `F_8 = F_2[x]/(x³ + x + 1)`, elements as bit patterns.
struct F8;

impl SmallField for F8 {
    fn add(a: u8, b: u8) -> u8 {
        a ^ b
    }
    fn mul(a: u8, b: u8) -> u8 {
        let mut r = 0u8;
        for i in 0..3 {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        for i in (3..5).rev() {
            if r >> i & 1 == 1 {
                r ^= 0b1011 << (i - 3);
            }
        }
        r
    }
    fn neg(a: u8) -> u8 {
        a
    }
    fn inv(a: u8) -> u8 {
        (1..8).find(|&b| Self::mul(a, b) == 1).expect("nonzero")
    }
}

/// Square matrix over a small field, acting on row vectors.
struct Mat<F> {
    n: usize,
    d: Vec<u8>,
    _field: PhantomData<fn() -> F>,
}

impl<F> Clone for Mat<F> {
    fn clone(&self) -> Self {
        Mat {
            n: self.n,
            d: self.d.clone(),
            _field: PhantomData,
        }
    }
}

impl<F> PartialEq for Mat<F> {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d
    }
}

impl<F> Eq for Mat<F> {}

impl<F> Hash for Mat<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.d.hash(state);
    }
}

impl<F> std::fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.d)
    }
}

impl<F: SmallField> Mat<F> {
    fn from_rows(rows: &[&[u8]]) -> Self {
        let n = rows.len();
        Mat {
            n,
            d: rows.iter().flat_map(|r| r.iter().copied()).collect(),
            _field: PhantomData,
        }
    }

    fn identity(n: usize) -> Self {
        let mut d = vec![0; n * n];
        for i in 0..n {
            d[i * n + i] = 1;
        }
        Mat {
            n,
            d,
            _field: PhantomData,
        }
    }
}

impl<F: SmallField> GroupElement for Mat<F> {
    type Index = HashIndex<Self>;

    fn mul(&self, rhs: &Self) -> Self {
        let n = self.n;
        let mut d = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.d[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    d[i * n + j] = F::add(d[i * n + j], F::mul(a, rhs.d[k * n + j]));
                }
            }
        }
        Mat {
            n,
            d,
            _field: PhantomData,
        }
    }

    fn inverse(&self) -> Self {
        let n = self.n;
        let mut a = self.d.clone();
        let mut inv = Self::identity(n).d;
        for col in 0..n {
            let p = (col..n).find(|&r| a[r * n + col] != 0).expect("invertible");
            for j in 0..n {
                a.swap(col * n + j, p * n + j);
                inv.swap(col * n + j, p * n + j);
            }
            let s = F::inv(a[col * n + col]);
            for j in 0..n {
                a[col * n + j] = F::mul(a[col * n + j], s);
                inv[col * n + j] = F::mul(inv[col * n + j], s);
            }
            for r in 0..n {
                let c = a[r * n + col];
                if r == col || c == 0 {
                    continue;
                }
                let c = F::neg(c);
                for j in 0..n {
                    a[r * n + j] = F::add(a[r * n + j], F::mul(c, a[col * n + j]));
                    inv[r * n + j] = F::add(inv[r * n + j], F::mul(c, inv[col * n + j]));
                }
            }
        }
        Mat {
            n,
            d: inv,
            _field: PhantomData,
        }
    }
}

/// A 5×5 matrix over `F_2`, row `i` in bits `5i..5i+5`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct Gl5(u32);

impl Gl5 {
    fn row(self, i: u32) -> u32 {
        (self.0 >> (5 * i)) & 31
    }

    fn from_rows(rows: [u32; 5]) -> Self {
        Gl5(rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | (r << (5 * i))))
    }
}

/// Direct-address index over all 2²⁵ bit patterns.
struct DenseIndex(Vec<u32>);

impl Default for DenseIndex {
    fn default() -> Self {
        DenseIndex(vec![u32::MAX; 1 << 25])
    }
}

impl ElementIndex<Gl5> for DenseIndex {
    fn get(&self, e: &Gl5) -> Option<u32> {
        let v = self.0[e.0 as usize];
        (v != u32::MAX).then_some(v)
    }

    fn insert(&mut self, e: Gl5, position: u32) {
        self.0[e.0 as usize] = position;
    }
}

impl GroupElement for Gl5 {
    type Index = DenseIndex;

    fn mul(&self, rhs: &Self) -> Self {
        let mut rows = [0u32; 5];
        for (i, out) in rows.iter_mut().enumerate() {
            let r = self.row(i as u32);
            for j in 0..5 {
                if r >> j & 1 == 1 {
                    *out ^= rhs.row(j);
                }
            }
        }
        Gl5::from_rows(rows)
    }

    fn inverse(&self) -> Self {
        let mut a: [u32; 5] = std::array::from_fn(|i| self.row(i as u32));
        let mut inv: [u32; 5] = std::array::from_fn(|i| 1 << i);
        for col in 0..5 {
            let p = (col..5)
                .find(|&r| a[r] >> col & 1 == 1)
                .expect("invertible");
            a.swap(col, p);
            inv.swap(col, p);
            for r in 0..5 {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Gl5::from_rows(inv)
    }
}

fn perm(images: &[u32]) -> Perm {
    Perm::new(images.to_vec()).expect("valid permutation")
}

/// `PSL(2, q)` on the projective line `{0, …, q−1, ∞ = q}`, generated by
/// `x ↦ x + 1` and `x ↦ −1/x`.
fn psl2_generators(q: u32) -> Vec<Perm> {
    let inv = |x: u32| (1..q).find(|&y| x * y % q == 1).expect("prime field");
    let t: Vec<u32> = (0..=q)
        .map(|x| if x == q { q } else { (x + 1) % q })
        .collect();
    let s: Vec<u32> = (0..=q)
        .map(|x| match x {
            0 => q,
            x if x == q => 0,
            x => (q - inv(x)) % q,
        })
        .collect();
    vec![perm(&t), perm(&s)]
}

fn janko_generators() -> Vec<Mat<F11>> {
    let shift: Vec<Vec<u8>> = (0..7)
        .map(|i| (0..7).map(|j| u8::from(j == (i + 1) % 7)).collect())
        .collect();
    let z: [[i8; 7]; 7] = [
        [-3, 2, -1, -1, -3, -1, -3],
        [-2, 1, 1, 3, 1, 3, 3],
        [-1, -1, -3, -1, -3, -3, 2],
        [-1, -3, -1, -3, -3, 2, -1],
        [-3, -1, -3, -3, 2, -1, -1],
        [1, 3, 3, -2, 1, 1, 3],
        [3, 3, -2, 1, 1, 3, 1],
    ];
    let z: Vec<Vec<u8>> = z
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(11) as u8).collect())
        .collect();
    let as_rows =
        |m: &Vec<Vec<u8>>| Mat::from_rows(&m.iter().map(Vec::as_slice).collect::<Vec<_>>());
    vec![as_rows(&shift), as_rows(&z)]
}

/// Suzuki's generators of `Sz(8) ≤ GL(4, 8)`: the antidiagonal involution and
/// lower unitriangular `T(a, b)` with `θ(a) = a⁴`.
fn suzuki_generators() -> Vec<Mat<F8>> {
    let pow = |a: u8, e: u32| (0..e).fold(1u8, |acc, _| F8::mul(acc, a));
    let theta = |a: u8| pow(a, 4);
    let t = |a: u8, b: u8| {
        let at = theta(a);
        let r3 = [
            F8::add(F8::add(F8::mul(pow(a, 2), at), F8::mul(a, b)), theta(b)),
            F8::add(F8::mul(a, at), b),
            a,
            1,
        ];
        Mat::<F8>::from_rows(&[&[1, 0, 0, 0], &[a, 1, 0, 0], &[b, at, 1, 0], &r3])
    };
    let w = Mat::<F8>::from_rows(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]);
    vec![w, t(1, 0), t(1, 1), t(2, 0), t(2, 1)]
}

fn gl5_generators() -> Vec<Gl5> {
    // Transvection e1 ↦ e1 + e2 and the cyclic permutation of the basis.
    let t = Gl5::from_rows([0b00011, 0b00010, 0b00100, 0b01000, 0b10000]);
    let c = Gl5::from_rows([0b00010, 0b00100, 0b01000, 0b10000, 0b00001]);
    vec![t, c]
}

struct Job {
    stem: &'static str,
    name: &'static str,
    order: u64,
    classes: usize,
    provenance: &'static str,
}

fn save(dir: &Path, job: &Job, t: CharacterTable) {
    assert_eq!(t.order(), job.order, "{}: group order", job.name);
    assert_eq!(t.class_count(), job.classes, "{}: class count", job.name);
    let t = t.with_provenance(job.provenance);
    let path = dir.join(format!("{}.json", job.stem));
    std::fs::write(&path, print_table(&t)).expect("write table");
    println!("wrote {} ({} classes)", path.display(), t.class_count());
}

fn run<E: GroupElement>(dir: &Path, job: &Job, identity: E, gens: &[E], bound: usize) {
    let start = Instant::now();
    let g = enumerate(identity, gens, bound).expect("enumeration");
    println!(
        "{}: {} elements in {:.1?}",
        job.name,
        g.order(),
        start.elapsed()
    );
    let t = dixon_table(job.name, &g).expect("Dixon–Schneider");
    println!("{}: table in {:.1?}", job.name, start.elapsed());
    save(dir, job, t);
}

const HAND: &[&str] = &[
    "C2", "C6", "C12", "S3", "S4", "A4", "D8", "Q8", "SL2_3", "A5",
];

fn main() {
    let mut args = std::env::args().skip(1);
    let dir = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus"));
    let only: Vec<String> = args.collect();
    let wanted = |stem: &str| only.is_empty() || only.iter().any(|s| s == stem);

    for stem in HAND.iter().filter(|s| wanted(s)) {
        let path = dir.join(format!("{stem}.json"));
        let bytes = std::fs::read(&path).expect("read hand-entered table");
        let t = parse_document(&bytes).expect("parse hand-entered table");
        let violations = t.validate();
        assert!(violations.is_empty(), "{stem}: {violations:?}");
        std::fs::write(&path, print_table(&t)).expect("write");
        println!("normalized {}", path.display());
    }

    let perm_jobs: [(Job, usize, Vec<Perm>); 4] = [
        (
            Job { stem: "S5", name: "S5", order: 120, classes: 7,
                  provenance: "computed by Dixon-Schneider from <(0 1 2 3 4), (0 1)>" },
            5,
            vec![perm(&[1, 2, 3, 4, 0]), perm(&[1, 0, 2, 3, 4])],
        ),
        (
            Job { stem: "A6", name: "A6", order: 360, classes: 7,
                  provenance: "computed by Dixon-Schneider from <(0 1 2 3 4), (3 4 5)>" },
            6,
            vec![perm(&[1, 2, 3, 4, 0, 5]), perm(&[0, 1, 2, 4, 5, 3])],
        ),
        (
            Job { stem: "L2_7", name: "L2(7)", order: 168, classes: 6,
                  provenance: "computed by Dixon-Schneider from PSL(2,7) on the projective line, generated by x+1 and -1/x" },
            8,
            psl2_generators(7),
        ),
        (
            Job { stem: "L2_11", name: "L2(11)", order: 660, classes: 8,
                  provenance: "computed by Dixon-Schneider from PSL(2,11) on the projective line, generated by x+1 and -1/x" },
            12,
            psl2_generators(11),
        ),
    ];
    for (job, degree, gens) in &perm_jobs {
        if wanted(job.stem) {
            run(&dir, job, Perm::identity(*degree), gens, DEFAULT_BOUND);
        }
    }

    let sz = Job {
        stem: "Sz8",
        name: "Sz(8)",
        order: 29_120,
        classes: 11,
        provenance: "computed by Dixon-Schneider from Suzuki's 4x4 matrix generators over GF(8) = GF(2)[x]/(x^3+x+1)",
    };
    if wanted(sz.stem) {
        run(
            &dir,
            &sz,
            Mat::<F8>::identity(4),
            &suzuki_generators(),
            DEFAULT_BOUND,
        );
    }

    let j1 = Job {
        stem: "J1",
        name: "J1",
        order: 175_560,
        classes: 15,
        provenance: "computed by Dixon-Schneider from Janko's 7x7 matrix generators over GF(11)",
    };
    if wanted(j1.stem) {
        run(
            &dir,
            &j1,
            Mat::<F11>::identity(7),
            &janko_generators(),
            DEFAULT_BOUND,
        );
    }

    let l52 = Job {
        stem: "L5_2",
        name: "L5(2)",
        order: 9_999_360,
        classes: 27,
        provenance: "computed by Dixon-Schneider from GL(5,2) generated by a transvection and a cyclic basis permutation",
    };
    if wanted(l52.stem) {
        run(
            &dir,
            &l52,
            Gl5::from_rows([1, 2, 4, 8, 16]),
            &gl5_generators(),
            20_000_000,
        );
    }
}
