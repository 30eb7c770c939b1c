//! Named groups, group specs and the Aut(A6) tower.

mod file;
mod matrix;
mod spec;
mod tower;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use sha2::{Digest, Sha256};

pub use file::{parse_group_text, read_group_file};
pub use matrix::{projective_general_linear, projective_special_linear, special_linear};
pub use spec::GroupSpec;
pub use tower::{Aut6Tower, TowerEntry};

use crate::error::{HgsError, Result};
use crate::group::{FiniteGroup, Limits};
use crate::perm::{for_each_permutation, gcd, lcm, Perm};

pub fn symmetric(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(HgsError::InvalidGroup("S0".into()));
    }
    let gens = if n == 1 {
        vec![Perm::identity(1)]
    } else {
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        vec![Perm::from_images(cycle)?, Perm::from_images(swap)?]
    };
    Ok(FiniteGroup::from_permutations(&gens, limits)?.with_name(format!("S{n}")))
}

pub fn alternating(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(HgsError::InvalidGroup("A0".into()));
    }
    let gens: Vec<Perm> = if n < 3 {
        vec![Perm::identity(n)]
    } else {
        (0..n - 2)
            .map(|i| {
                let mut images: Vec<usize> = (0..n).collect();
                images[i] = i + 1;
                images[i + 1] = i + 2;
                images[i + 2] = i;
                Perm::from_images(images)
            })
            .collect::<Result<_>>()?
    };
    Ok(FiniteGroup::from_permutations(&gens, limits)?.with_name(format!("A{n}")))
}

/// Dihedral group of order `2n`, as pairs (rotation, reflected).
pub fn dihedral(n: usize, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(HgsError::InvalidGroup("D0".into()));
    }
    let mul = |a: &(usize, bool), b: &(usize, bool)| {
        let rot = if a.1 { (a.0 + n - b.0) % n } else { (a.0 + b.0) % n };
        (rot, a.1 ^ b.1)
    };
    let (g, _) = FiniteGroup::from_generators((0usize, false), &[(1 % n, false), (0, true)], mul, limits)?;
    Ok(g.with_name(format!("D{n}")))
}

/// Quaternion group, as signed units `±1, ±i, ±j, ±k`.
pub fn quaternion(limits: &Limits) -> Result<FiniteGroup> {
    // UNIT[a][b] = (negated, unit) for the product of units a·b, 0=1 1=i 2=j 3=k
    const UNIT: [[(bool, u8); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mul = |a: &(bool, u8), b: &(bool, u8)| {
        let (neg, u) = UNIT[a.1 as usize][b.1 as usize];
        (a.0 ^ b.0 ^ neg, u)
    };
    let (g, _) = FiniteGroup::from_generators((false, 0u8), &[(false, 1), (false, 2)], mul, limits)?;
    Ok(g.with_name("Q8"))
}

/// Short description of every label the resolver understands.
pub fn catalog_labels() -> Vec<(&'static str, &'static str)> {
    vec![
        ("Cn", "cyclic group of order n"),
        ("Dn", "dihedral group of order 2n"),
        ("Sn", "symmetric group on n points"),
        ("An", "alternating group on n points"),
        ("Q8", "quaternion group"),
        ("V4", "Klein four-group"),
        ("SL(2,q)", "special linear group over GF(q), as 2x2 matrices"),
        ("PSL(2,q)", "projective special linear group, on the projective line"),
        ("PGL(2,q)", "projective general linear group, on the projective line"),
        ("M10", "Mathieu group M10, built inside Aut(A6)"),
        ("Aut(A6)", "automorphism group of A6"),
        ("AxCp(A,p)", "direct product of the group A with a cyclic group of prime order p"),
        ("GxH", "direct product"),
        ("file:PATH", "group file (`perm <degree>` or `table <n>` format)"),
    ]
}

/// Resolves group specs, caching results by spec digest.
pub struct Catalog {
    limits: Limits,
    cache: Mutex<HashMap<String, Arc<FiniteGroup>>>,
    tower: OnceLock<Arc<Aut6Tower>>,
}

impl Catalog {
    pub fn new(limits: Limits) -> Catalog {
        Catalog {
            limits,
            cache: Mutex::new(HashMap::new()),
            tower: OnceLock::new(),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn resolve(&self, text: &str) -> Result<Arc<FiniteGroup>> {
        self.resolve_spec(&GroupSpec::parse(text)?)
    }

    pub fn resolve_spec(&self, spec: &GroupSpec) -> Result<Arc<FiniteGroup>> {
        let key = self.cache_key(spec)?;
        if let Some(g) = self.cache.lock().expect("catalog cache poisoned").get(&key) {
            return Ok(g.clone());
        }
        let g = Arc::new(self.build(spec)?.with_name(spec.to_string()));
        self.self_check(spec, &g)?;
        self.cache
            .lock()
            .expect("catalog cache poisoned")
            .entry(key)
            .or_insert_with(|| g.clone());
        Ok(g)
    }

    /// The Aut(A6) tower, built once per catalog.
    pub fn tower(&self) -> Result<Arc<Aut6Tower>> {
        if let Some(t) = self.tower.get() {
            return Ok(t.clone());
        }
        let t = Arc::new(Aut6Tower::build(&self.limits)?);
        Ok(self.tower.get_or_init(|| t).clone())
    }

    fn cache_key(&self, spec: &GroupSpec) -> Result<String> {
        let mut h = Sha256::new();
        h.update(spec.to_string().as_bytes());
        if let GroupSpec::File(path) = spec {
            h.update(std::fs::read(path)?);
        }
        Ok(hex::encode(h.finalize()))
    }

    fn build(&self, spec: &GroupSpec) -> Result<FiniteGroup> {
        let limits = &self.limits;
        match spec {
            GroupSpec::Named { label, params } => {
                let n = params[0];
                match label.as_str() {
                    "C" => FiniteGroup::cyclic(n, limits),
                    "D" => dihedral(n, limits),
                    "S" => symmetric(n, limits),
                    "A" => alternating(n, limits),
                    "Q" => quaternion(limits),
                    "V" => {
                        let c2 = FiniteGroup::cyclic(2, limits)?;
                        FiniteGroup::direct_product(&c2, &c2, limits)
                    }
                    "SL" => special_linear(params[1], limits),
                    "PSL" => projective_special_linear(params[1], limits),
                    "PGL" => projective_general_linear(params[1], limits),
                    "M" => Ok(tower_group(&*self.tower()?, "M10")),
                    "Aut" => Ok(tower_group(&*self.tower()?, "Aut(A6)")),
                    _ => Err(HgsError::UnknownLabel(spec.to_string())),
                }
            }
            GroupSpec::AxCp(a, p) => {
                let a = self.resolve_spec(a)?;
                let c = FiniteGroup::cyclic(*p, limits)?;
                FiniteGroup::direct_product(&a, &c, limits)
            }
            GroupSpec::Product(parts) => {
                let mut acc = Arc::unwrap_or_clone(self.resolve_spec(&parts[0])?);
                for part in &parts[1..] {
                    let next = self.resolve_spec(part)?;
                    acc = FiniteGroup::direct_product(&acc, &next, limits)?;
                }
                Ok(acc)
            }
            GroupSpec::File(path) => read_group_file(path, limits),
        }
    }

    fn self_check(&self, spec: &GroupSpec, g: &FiniteGroup) -> Result<()> {
        if let Some(order) = expected_order(spec) {
            if g.order() != order {
                return Err(HgsError::Internal(format!(
                    "{spec} resolved to order {}, expected {order}",
                    g.order()
                )));
            }
        }
        if let Some(census) = expected_census(spec) {
            let observed = census_of(g);
            if observed != census {
                return Err(HgsError::Internal(format!(
                    "{spec} census {observed:?} differs from the expected {census:?}"
                )));
            }
        }
        Ok(())
    }
}

fn tower_group(tower: &Aut6Tower, label: &str) -> FiniteGroup {
    let e = tower.entry(label).expect("tower has all labels");
    (*e.group).clone()
}

pub type Census = BTreeMap<usize, usize>;

pub fn census_of(g: &FiniteGroup) -> Census {
    let mut c = Census::new();
    for &o in g.element_orders() {
        *c.entry(o as usize).or_default() += 1;
    }
    c
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Order predicted by the label alone.
pub fn expected_order(spec: &GroupSpec) -> Option<usize> {
    match spec {
        GroupSpec::Named { label, params } => {
            let n = params[0];
            Some(match label.as_str() {
                "C" => n,
                "D" => 2 * n,
                "S" => factorial(n),
                "A" => factorial(n).div_ceil(2),
                "Q" => 8,
                "V" => 4,
                "SL" | "PGL" => {
                    let q = params[1];
                    q * (q * q - 1)
                }
                "PSL" => {
                    let q = params[1];
                    q * (q * q - 1) / gcd(2, q - 1)
                }
                "M" => 720,
                "Aut" => 1440,
                _ => return None,
            })
        }
        GroupSpec::AxCp(a, p) => expected_order(a).map(|o| o * p),
        GroupSpec::Product(parts) => parts.iter().map(expected_order).product(),
        GroupSpec::File(_) => None,
    }
}

/// Element-order census predicted independently of the group tables:
/// Euler's totient for cyclic and dihedral groups, a cycle-type scan over
/// all permutations for Sn and An, and lcm convolution for products.
pub fn expected_census(spec: &GroupSpec) -> Option<Census> {
    match spec {
        GroupSpec::Named { label, params } => {
            let n = params[0];
            match label.as_str() {
                "C" => Some(cyclic_census(n)),
                "D" => {
                    let mut c = cyclic_census(n);
                    *c.entry(2).or_default() += n;
                    Some(c)
                }
                "S" | "A" if n <= 8 => {
                    let even_only = label == "A";
                    let mut c = Census::new();
                    for_each_permutation(n, |images| {
                        let p = Perm::from_images_unchecked(images.to_vec());
                        if !even_only || p.is_even() {
                            *c.entry(p.order()).or_default() += 1;
                        }
                    });
                    Some(c)
                }
                "Q" => Some(Census::from([(1, 1), (2, 1), (4, 6)])),
                "V" => Some(Census::from([(1, 1), (2, 3)])),
                _ => None,
            }
        }
        GroupSpec::AxCp(a, p) => Some(convolve(&expected_census(a)?, &cyclic_census(*p))),
        GroupSpec::Product(parts) => {
            let mut acc = Census::from([(1, 1)]);
            for part in parts {
                acc = convolve(&acc, &expected_census(part)?);
            }
            Some(acc)
        }
        GroupSpec::File(_) => None,
    }
}

fn cyclic_census(n: usize) -> Census {
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| (d, (1..=d).filter(|&k| gcd(k, d) == 1).count()))
        .collect()
}

fn convolve(a: &Census, b: &Census) -> Census {
    let mut c = Census::new();
    for (&oa, &ca) in a {
        for (&ob, &cb) in b {
            *c.entry(lcm(oa, ob)).or_default() += ca * cb;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> Catalog {
        Catalog::new(Limits::default())
    }

    #[test]
    fn small_catalog_orders() {
        let c = cat();
        for (s, n) in [
            ("C4", 4),
            ("V4", 4),
            ("C6", 6),
            ("S3", 6),
            ("D3", 6),
            ("C8", 8),
            ("C4xC2", 8),
            ("C2xC2xC2", 8),
            ("D4", 8),
            ("Q8", 8),
            ("S5", 120),
            ("A5", 60),
            ("AxCp(A5,2)", 120),
        ] {
            let g = c.resolve(s).unwrap();
            assert_eq!(g.order(), n, "{s}");
            assert!(g.check_axioms_exhaustively(), "{s}");
            assert_eq!(g.label(), s);
        }
    }

    #[test]
    fn resolution_is_cached_and_deterministic() {
        let c = cat();
        let a = c.resolve("PGL(2,9)").unwrap();
        let b = c.resolve(" PGL(2,9)").unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let fresh = cat().resolve("PGL(2,9)").unwrap();
        assert_eq!(a.digest(), fresh.digest());
    }

    #[test]
    fn catalog_examples() {
        let c = cat();
        let pgl = c.resolve("PGL(2,9)").unwrap();
        assert_eq!(pgl.order(), 720);
        assert_eq!(pgl.perm_rep().unwrap()[0].degree(), 10);
        let sl = c.resolve("SL(2,9)").unwrap();
        assert_eq!(sl.order(), 720);
        assert_eq!(sl.center().order(), 2);
        let n = c.resolve("AxCp(A6,2)").unwrap();
        let orders: Vec<usize> = n
            .normal_subgroups(&Limits::default())
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, vec![1, 2, 360, 720]);
    }

    #[test]
    fn unknown_labels_fail() {
        assert!(matches!(cat().resolve("Z7"), Err(HgsError::UnknownLabel(_))));
        assert!(cat().resolve("PGL(2,6)").is_err());
    }

    #[test]
    fn census_oracles() {
        assert_eq!(cyclic_census(6), Census::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        let s4 = expected_census(&GroupSpec::parse("S4").unwrap()).unwrap();
        assert_eq!(s4, Census::from([(1, 1), (2, 9), (3, 8), (4, 6)]));
    }

    #[test]
    fn products_of_products() {
        let g = cat().resolve("(C2xC2)xC3").unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.is_abelian());
    }

    #[test]
    fn aut6_tower_labels() {
        let c = cat();
        let t = c.tower().unwrap();
        let labels: Vec<&str> = t.entries.iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, ["Inn(A6)", "S6", "PGL(2,9)", "M10", "Aut(A6)"]);
        assert_eq!(t.aut.order(), 1440);
        let m10 = t.entry("M10").unwrap();
        assert_eq!(m10.outer_involutions, 0);
        assert_eq!(m10.outer_order8, 180);
        let pgl = t.entry("PGL(2,9)").unwrap();
        assert_eq!(pgl.outer_involutions, 36);
        assert_eq!(pgl.outer_order6, 0);
        let s6 = t.entry("S6").unwrap();
        assert_eq!(s6.outer_involutions, 30);
        assert_eq!(s6.outer_order6, 240);
        let g = c.resolve("M10").unwrap();
        assert_eq!(g.order(), 720);
        assert_eq!(g.order_census(2, crate::group::Region::All), 45);
        // stable across fresh builds
        let again = cat().resolve("M10").unwrap();
        assert_eq!(g.digest(), again.digest());
    }
}
