//! Determined values of `s(F, K, Z)`.
//!
//! Each closed-form family and each small table contributes a [`Claim`]. The
//! oracle collects every applicable claim; when they disagree it reports the
//! hull of the claimed values together with a conflict note instead of
//! choosing one.

use std::fmt;

use crate::bounds::ceil_div;
use crate::combos::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownS {
    Exact(usize),
    /// `lo <= s <= hi`.
    Range(usize, usize),
}

impl KnownS {
    pub fn lo(self) -> usize {
        match self {
            KnownS::Exact(v) | KnownS::Range(v, _) => v,
        }
    }

    pub fn hi(self) -> usize {
        match self {
            KnownS::Exact(v) | KnownS::Range(_, v) => v,
        }
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            KnownS::Exact(v) => Some(v),
            KnownS::Range(..) => None,
        }
    }
}

impl fmt::Display for KnownS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnownS::Exact(v) => write!(f, "{v}"),
            KnownS::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

/// One family's statement about `s(F, K, Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub value: KnownS,
    pub provenance: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownValue {
    pub f: usize,
    pub k: usize,
    pub z: usize,
    pub s: KnownS,
    /// Identifiers of the families that produced the value, `+`-joined.
    pub provenance: String,
    pub conflict_note: Option<String>,
}

impl KnownValue {
    pub fn exact(&self) -> Option<usize> {
        self.s.exact()
    }
}

/// `(F, K, Z, s)` values established case by case.
const SMALL_TABLE: &[(usize, usize, usize, usize, &str)] = &[
    (5, 3, 2, 5, "5k2-small"),
    (5, 4, 2, 6, "5k2-small"),
    (5, 5, 2, 7, "5k2-small"),
    (5, 6, 2, 8, "5k2-small"),
    (5, 7, 2, 10, "5k2-small"),
    (5, 8, 2, 10, "5k2-small"),
    (5, 9, 2, 10, "5k2-small"),
    (5, 10, 2, 10, "5k2-small"),
    (5, 5, 3, 4, "5k3-small"),
    (5, 6, 3, 4, "5k3-small"),
    (6, 4, 3, 4, "f4k3-small"),
    (7, 4, 3, 7, "search-743"),
    (6, 6, 1, 15, "s66"),
    (6, 6, 2, 11, "s66"),
    (6, 6, 3, 6, "s66"),
    (6, 6, 4, 3, "s66"),
    (6, 6, 5, 1, "s66"),
    (7, 7, 1, 21, "s77"),
    (7, 7, 2, 17, "s77"),
    (7, 7, 3, 10, "s77"),
    (7, 7, 4, 6, "s77"),
    (7, 7, 5, 4, "s77"),
    (7, 7, 6, 1, "s77"),
    (8, 8, 5, 6, "blow-up-441"),
    (12, 12, 9, 6, "blow-up-441"),
];

/// `s(F, 4, 3)` for `F = 4..=12`.
const F4K3: [usize; 9] = [1, 3, 4, 8, 10, 12, 14, 17, 18];

fn exact(value: usize, provenance: &'static str) -> Claim {
    Claim {
        value: KnownS::Exact(value),
        provenance,
    }
}

fn basic(f: usize, k: usize, z: usize) -> usize {
    ceil_div(k * (f - z), z + 1)
}

fn s_k2(f: usize, z: usize) -> usize {
    if f >= 2 * z {
        2 * f - 3 * z
    } else {
        f - z
    }
}

fn s_z1(f: usize, k: usize) -> usize {
    let (l, i) = (k / f, k % f);
    l * f * (f - 1) / 2 + i * i.saturating_sub(1) / 2 + i * (f - i)
}

fn s_ff2(f: usize) -> usize {
    match f {
        3 => 1,
        4 => 4,
        5 => 7,
        _ => 3 * f - 8 + s_ff2(f - 3),
    }
}

/// Every applicable claim, in a fixed order: closed-form families first,
/// then small tables.
pub fn claims(f: usize, k: usize, z: usize) -> Vec<Claim> {
    let mut out = Vec::new();
    if f == 0 || k == 0 || z > f {
        return out;
    }
    if z == 0 {
        out.push(exact(f * k, "simple-z0"));
    }
    if z == f {
        out.push(exact(0, "simple-zf"));
        return out;
    }
    if z + 1 == f {
        out.push(exact(k.div_ceil(f), "simple-z-f-minus-1"));
    }
    let t = f - z;
    if f >= t * k {
        out.push(exact(t, "simple-f-ge-tk"));
    }
    if k == 2 {
        out.push(exact(s_k2(f, z), "k2"));
    }
    if z == 1 && f >= 2 {
        out.push(exact(s_z1(f, k), "z1-general"));
    }
    if z >= 1 {
        let c = binomial(f, z);
        let xmax = ceil_div(z + 1, f - z) - 1;
        let l = k.div_ceil(c);
        if l * c - k <= xmax {
            out.push(exact(l * binomial(f, z + 1), "rpda-copies"));
        }
    }
    if k > 2 {
        for tt in 2..k {
            if binomial(k, tt) == f && binomial(k - 1, tt - 1) == z {
                out.push(exact(binomial(k, tt + 1), "large-f-transpose"));
            }
        }
    }
    if (f, z) == (4, 2) {
        let extra = usize::from(!matches!(k % 6, 0 | 2 | 5));
        out.push(exact(ceil_div(2 * k, 3) + extra, "4k2"));
    }
    if (f, z) == (5, 3) {
        let extra = usize::from(!matches!(k % 10, 0 | 9));
        out.push(exact(k.div_ceil(2) + extra, "5k3"));
    }
    if (f, z) == (5, 2) && k >= 3 {
        out.push(match k % 10 {
            0 => exact(k, "5k2-formula"),
            9 => exact(k + 1, "5k2-formula"),
            _ => exact(k + 2, "5k2-formula"),
        });
    }
    if k == 4 && z == 3 && f >= 4 {
        if f <= 12 {
            out.push(exact(F4K3[f - 4], "f4k3-small"));
        }
        if f >= 12 {
            out.push(exact(4 * f - 30, "f4k3-linear"));
        }
    }
    if f == k && f.is_multiple_of(3) && z + 2 == f {
        out.push(exact(3, "3t"));
    }
    if f == k && z == 2 && f >= 3 {
        out.push(exact(s_ff2(f), "ff2"));
    }
    if f.is_multiple_of(2) && k.is_multiple_of(2) && z >= f / 2 {
        let (hf, hk, hz) = (f / 2, k / 2, z - f / 2);
        let half_basic = basic(hf, hk, hz);
        if hz < hf
            && ceil_div(2 * hk * (hf - hz), hf + hz + 1) == half_basic
            && best_known_s(hf, hk, hz).and_then(|v| v.exact()) == Some(half_basic)
        {
            out.push(exact(half_basic, "blow-up"));
        }
    }
    for &(tf, tk, tz, ts, prov) in SMALL_TABLE {
        if (tf, tk, tz) == (f, k, z) {
            out.push(exact(ts, prov));
        }
    }
    out
}

/// The determined value of `s(F, K, Z)`, if any family covers it.
pub fn best_known_s(f: usize, k: usize, z: usize) -> Option<KnownValue> {
    let all = claims(f, k, z);
    let first = all.first()?;
    let mut names: Vec<&str> = Vec::new();
    for c in &all {
        if !names.contains(&c.provenance) {
            names.push(c.provenance);
        }
    }
    let agree = all.iter().all(|c| c.value == first.value);
    let (s, conflict_note) = if agree {
        let note = match first.value {
            KnownS::Exact(_) => None,
            KnownS::Range(..) => Some(format!("{} only brackets the value", first.provenance)),
        };
        (first.value, note)
    } else {
        let lo = all.iter().map(|c| c.value.lo()).min().expect("nonempty");
        let hi = all.iter().map(|c| c.value.hi()).max().expect("nonempty");
        let detail: Vec<String> = all
            .iter()
            .map(|c| format!("{} says {}", c.provenance, c.value))
            .collect();
        (
            KnownS::Range(lo, hi),
            Some(format!("conflicting claims: {}", detail.join("; "))),
        )
    };
    Some(KnownValue {
        f,
        k,
        z,
        s,
        provenance: names.join("+"),
        conflict_note,
    })
}
