use fixedbitset::FixedBitSet;

macro_rules! id_set {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Hash, Default)]
        pub struct $name(FixedBitSet);

        impl $name {
            pub fn new(capacity: usize) -> Self {
                $name(FixedBitSet::with_capacity(capacity))
            }

            pub fn full(capacity: usize) -> Self {
                let mut s = FixedBitSet::with_capacity(capacity);
                s.insert_range(..);
                $name(s)
            }

            pub fn from_iter(capacity: usize, ids: impl IntoIterator<Item = usize>) -> Self {
                let mut s = Self::new(capacity);
                for i in ids {
                    s.insert(i);
                }
                s
            }

            pub fn capacity(&self) -> usize {
                self.0.len()
            }

            pub fn insert(&mut self, id: usize) {
                self.0.insert(id);
            }

            pub fn remove(&mut self, id: usize) {
                self.0.set(id, false);
            }

            pub fn contains(&self, id: usize) -> bool {
                self.0.contains(id)
            }

            pub fn len(&self) -> usize {
                self.0.count_ones(..)
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_clear()
            }

            pub fn first(&self) -> Option<usize> {
                self.0.ones().next()
            }

            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.ones()
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }

            pub fn union_with(&mut self, other: &Self) {
                self.0.union_with(&other.0);
            }

            pub fn difference_with(&mut self, other: &Self) {
                self.0.difference_with(&other.0);
            }

            pub fn complement(&self) -> Self {
                let mut s = self.0.clone();
                s.toggle_range(..);
                $name(s)
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.0.is_disjoint(&other.0)
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.is_subset(&other.0)
            }
        }

        impl std::fmt::Debug for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

id_set!(
    /// Bitset over vertex ids `0..capacity`.
    VertexSet
);
id_set!(
    /// Bitset over edge ids `0..capacity`.
    EdgeSet
);
