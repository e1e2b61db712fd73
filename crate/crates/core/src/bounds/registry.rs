use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    Exact,
    UpperBound,
}

/// An externally established value of `A_q(n,d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownValue {
    pub kind: ValueKind,
    pub value: u64,
    pub provenance: &'static str,
}

/// Read-only table of values taken from the literature. Misses are explicit.
#[derive(Debug, Clone)]
pub struct KnownValuesRegistry {
    entries: BTreeMap<(usize, usize, usize), KnownValue>,
}

const BUILTIN: &[((usize, usize, usize), ValueKind, u64, &str)] = &[
    (
        (3, 15, 11),
        ValueKind::Exact,
        10,
        "Brouwer table of bounds for ternary codes: A_3(15,11) = 10",
    ),
    (
        (4, 8, 6),
        ValueKind::Exact,
        32,
        "Brouwer table; the size-32 code is unique, from the unique symmetric (2,4)-net (Al-Kenani)",
    ),
    (
        (5, 7, 6),
        ValueKind::Exact,
        15,
        "Plotkin bound 15, attained by Kirkman triple systems of order 15",
    ),
];

impl KnownValuesRegistry {
    pub fn builtin() -> Self {
        let entries = BUILTIN
            .iter()
            .map(|&(key, kind, value, provenance)| {
                (
                    key,
                    KnownValue {
                        kind,
                        value,
                        provenance,
                    },
                )
            })
            .collect();
        Self { entries }
    }

    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn lookup(&self, q: usize, n: usize, d: usize) -> Option<&KnownValue> {
        self.entries.get(&(q, n, d))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize, usize), &KnownValue)> {
        self.entries.iter()
    }
}

impl Default for KnownValuesRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}
