use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

/// A named indeterminate.
///
/// Names are interned, so a `Var` is a copyable pointer and equality is
/// pointer equality. Variables are totally ordered by a natural ordering of
/// their names: alphabetic runs compare lexically and digit runs
/// numerically, so `x2 < x10 < y`. The order depends only on the names,
/// never on construction order, which keeps canonical forms identical
/// across threads and processes.
#[derive(Clone, Copy)]
pub struct Var(&'static VarInfo);

struct VarInfo {
    name: Box<str>,
    /// Packed leading alphabetic run (first 8 bytes, big-endian) and the
    /// value of the digit run after it, plus one (0 when absent). Agrees
    /// with the natural order whenever the two keys differ.
    key: (u64, u64),
}

fn registry() -> &'static Mutex<HashMap<&'static str, &'static VarInfo>> {
    static REGISTRY: OnceLock<Mutex<HashMap<&'static str, &'static VarInfo>>> = OnceLock::new();
    REGISTRY.get_or_init(Default::default)
}

impl Var {
    pub fn new(name: &str) -> Var {
        assert!(!name.is_empty(), "variable names must be nonempty");
        let mut map = registry().lock().expect("variable registry poisoned");
        if let Some(info) = map.get(name) {
            return Var(info);
        }
        let info: &'static VarInfo = Box::leak(Box::new(VarInfo {
            name: name.into(),
            key: sort_key(name.as_bytes()),
        }));
        map.insert(&info.name, info);
        Var(info)
    }

    pub fn name(&self) -> &'static str {
        &self.0.name
    }
}

fn sort_key(name: &[u8]) -> (u64, u64) {
    let alpha_len = name
        .iter()
        .position(u8::is_ascii_digit)
        .unwrap_or(name.len());
    let mut packed = [0u8; 8];
    for (dst, src) in packed.iter_mut().zip(&name[..alpha_len]) {
        *dst = *src;
    }
    let prefix = u64::from_be_bytes(packed);
    if alpha_len > 8 {
        return (prefix, 0);
    }
    let (digits, _) = split_digits(&name[alpha_len..]);
    if digits.is_empty() {
        return (prefix, 0);
    }
    let trimmed = trim_zeros(digits);
    let value = if trimmed.len() > 18 {
        u64::MAX
    } else {
        std::str::from_utf8(trimmed)
            .expect("ascii")
            .parse::<u64>()
            .unwrap_or(0)
            + 1
    };
    (prefix, value)
}

impl From<&str> for Var {
    fn from(name: &str) -> Var {
        Var::new(name)
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Var) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Var {}

impl Hash for Var {
    fn hash<H: Hasher>(&self, state: &mut H) {
        std::ptr::hash(self.0, state)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Var) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.0
            .key
            .cmp(&other.0.key)
            .then_with(|| natural_cmp(&self.0.name, &other.0.name))
            .then_with(|| self.0.name.cmp(&other.0.name))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Var) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut a, mut b) = (a.as_bytes(), b.as_bytes());
    loop {
        match (a.first(), b.first()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let (da, ra) = split_digits(a);
                let (db, rb) = split_digits(b);
                let ta = trim_zeros(da);
                let tb = trim_zeros(db);
                let ord = ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb));
                if ord != Ordering::Equal {
                    return ord;
                }
                a = ra;
                b = rb;
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(y);
                }
                a = &a[1..];
                b = &b[1..];
            }
        }
    }
}

fn split_digits(s: &[u8]) -> (&[u8], &[u8]) {
    let end = s
        .iter()
        .position(|c| !c.is_ascii_digit())
        .unwrap_or(s.len());
    s.split_at(end)
}

fn trim_zeros(s: &[u8]) -> &[u8] {
    let start = s.iter().position(|&c| c != b'0').unwrap_or(s.len());
    &s[start..]
}
