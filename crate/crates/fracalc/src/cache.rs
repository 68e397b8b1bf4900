use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use fracalc_core::{jacobi_rule, QuadratureRule, Result, RuleSource};

/// Memoized quadrature rules, shared between threads.
///
/// Keys use the exact bits of the order, so a cached rule is the rule
/// [`jacobi_rule`] would build for that very order and results do not
/// depend on what was evaluated before.
#[derive(Debug, Default)]
pub struct RuleCache {
    rules: RwLock<HashMap<(u64, usize), Arc<QuadratureRule>>>,
}

impl RuleCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rules.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl RuleSource for RuleCache {
    fn rule(&self, s: f64, n: usize) -> Result<Arc<QuadratureRule>> {
        let key = (s.to_bits(), n);
        if let Some(rule) = self
            .rules
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(&key)
        {
            return Ok(Arc::clone(rule));
        }
        let rule = Arc::new(jacobi_rule(s, n)?);
        let mut rules = self.rules.write().unwrap_or_else(|e| e.into_inner());
        Ok(Arc::clone(rules.entry(key).or_insert(rule)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fracalc_core::{Engine, FreshRules, Func};

    #[test]
    fn cached_results_are_bit_identical() {
        let cached = Engine::new(RuleCache::new());
        let fresh = Engine::new(FreshRules);
        let f = Func::new("x^1.5", |x: f64| x.powf(1.5));
        for x in [0.25, 1.0, 3.0, 1.0] {
            let a = cached.rl_integral(&f, 0.7, x, 40).unwrap();
            let b = fresh.rl_integral(&f, 0.7, x, 40).unwrap();
            assert_eq!(a.to_bits(), b.to_bits());
        }
        assert_eq!(cached.rules().len(), 1);
    }

    #[test]
    fn concurrent_readers_and_writers() {
        let cache = RuleCache::new();
        std::thread::scope(|scope| {
            for t in 0..4 {
                let cache = &cache;
                scope.spawn(move || {
                    for i in 0..20 {
                        let s = 0.5 + ((i + t) % 5) as f64;
                        let rule = cache.rule(s, 16).unwrap();
                        assert_eq!(rule.nodes().len(), 16);
                    }
                });
            }
        });
        assert_eq!(cache.len(), 5);
    }

    #[test]
    fn errors_are_not_cached() {
        let cache = RuleCache::new();
        assert!(cache.rule(-1.0, 4).is_err());
        assert!(cache.is_empty());
    }
}
